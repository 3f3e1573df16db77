#include "burnout/metrics.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "burnout/error.hpp"

namespace burnout {

TeamItinerary itinerary(const Schedule& schedule, int team) {
    if (team < 0 || team >= schedule.config.team_count()) {
        throw ValidationError("unknown team id " + std::to_string(team));
    }
    TeamItinerary it;
    it.team = team;
    for (const Game* g : games_of_team(schedule, team)) {
        const Venue& v = schedule.config.venues[static_cast<std::size_t>(g->venue)];
        it.venues.push_back(v.id);
        it.cities.push_back(v.city);
        const DateTime start = schedule.game_start(*g);
        it.dates.push_back(start.date);
        it.starts.push_back(start);
    }
    return it;
}

int travel_count(const TeamItinerary& it) {
    int moves = 0;
    for (std::size_t k = 1; k < it.cities.size(); ++k) {
        if (it.cities[k] != it.cities[k - 1]) ++moves;
    }
    return moves;
}

std::pair<int, int> home_game_count(const Schedule& schedule, int team) {
    int primary = 0;
    int secondary = 0;
    const auto primary_venue = schedule.config.primary_venue(team);
    for (const Game& g : schedule.games) {
        if (g.home != team && g.away != team) continue;
        if (primary_venue && g.venue == *primary_venue) ++primary;
        if (g.home == team &&
            classify_designation(schedule.config, g) == Designation::SecondaryHome) {
            ++secondary;
        }
    }
    return {primary, secondary};
}

RestStats rest_statistics(const TeamItinerary& it) {
    if (it.dates.empty()) throw ValidationError("rest statistics need a non-empty itinerary");
    RestStats stats;
    stats.span_days = it.dates.back() - it.dates.front() + 1;
    const std::set<Date> distinct(it.dates.begin(), it.dates.end());
    stats.no_game_days = stats.span_days - static_cast<int>(distinct.size());
    stats.avg_games_per_day = static_cast<double>(it.dates.size()) / stats.span_days;
    return stats;
}

int streak_count(const TeamItinerary& it, int games, int window_days, StreakMode mode) {
    if (games < 1 || games > static_cast<int>(it.dates.size())) {
        throw ValidationError("streak pattern needs 1 <= X <= game count");
    }
    if (window_days < 1) throw ValidationError("streak window must be at least one day");

    // Game index set per window, encoded as a bitmask; 10-game fixtures fit
    // comfortably, and general schedules stay under 64 games per team.
    const auto window_games = [&](Date start) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < it.dates.size(); ++k) {
            if (it.dates[k] >= start && it.dates[k] - start < window_days) mask |= 1ull << k;
        }
        return mask;
    };

    int count = 0;
    std::vector<std::uint64_t> counted;
    for (Date s = it.dates.front(); s <= it.dates.back(); s += 1) {
        const std::uint64_t mask = window_games(s);
        if (std::popcount(mask) < games) continue;
        if (mode == StreakMode::Greedy) {
            bool covered = false;
            for (std::uint64_t prior : counted) {
                if ((mask & ~prior) == 0) {
                    covered = true;
                    break;
                }
            }
            if (covered) continue;
            counted.push_back(mask);
        }
        ++count;
    }
    return count;
}

const std::vector<std::pair<int, int>>& default_streak_patterns() {
    static const std::vector<std::pair<int, int>> patterns = {{2, 2}, {3, 4}, {4, 6}, {6, 11}};
    return patterns;
}

std::vector<CompetitiveSummary> summarize(const Schedule& schedule,
                                          const std::vector<std::pair<int, int>>& extra_patterns,
                                          StreakMode mode) {
    std::vector<std::pair<int, int>> patterns = default_streak_patterns();
    for (const auto& p : extra_patterns) {
        if (std::find(patterns.begin(), patterns.end(), p) == patterns.end()) patterns.push_back(p);
    }
    std::vector<CompetitiveSummary> rows;
    for (const Team& team : schedule.config.teams) {
        const TeamItinerary it = itinerary(schedule, team.id);
        if (it.dates.empty()) {
            throw ValidationError("team '" + team.abbrev + "' has no games; summary undefined");
        }
        CompetitiveSummary row;
        row.team = team.id;
        row.total_travel = travel_count(it);
        const auto [primary, secondary] = home_game_count(schedule, team.id);
        row.home_games = primary;
        row.secondary_home_games = secondary;
        const RestStats stats = rest_statistics(it);
        row.span_days = stats.span_days;
        row.no_game_days = stats.no_game_days;
        row.avg_games_per_day = stats.avg_games_per_day;
        row.rest_days_net = stats.no_game_days - row.total_travel;
        for (const auto& [x, y] : patterns) {
            row.streaks[{x, y}] = x <= static_cast<int>(it.size()) ? streak_count(it, x, y, mode) : 0;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string summaries_to_csv(const Schedule& schedule, const std::vector<CompetitiveSummary>& rows) {
    std::vector<std::pair<int, int>> patterns;
    if (!rows.empty()) {
        for (const auto& [p, unused] : rows.front().streaks) patterns.push_back(p);
    }
    std::ostringstream out;
    out << "team,venue_sequence,total_travel,home_games,secondary_home_games,span_days,"
           "no_game_days,rest_days_net,avg_games_per_day";
    for (const auto& [x, y] : patterns) out << ',' << x << "in" << y;
    out << '\n';
    out.precision(6);
    for (const CompetitiveSummary& row : rows) {
        const TeamItinerary it = itinerary(schedule, row.team);
        out << schedule.config.teams[static_cast<std::size_t>(row.team)].abbrev << ',';
        for (std::size_t k = 0; k < it.venues.size(); ++k) {
            if (k) out << ';';
            out << schedule.config.venues[static_cast<std::size_t>(it.venues[k])].code;
        }
        out << ',' << row.total_travel << ',' << row.home_games << ',' << row.secondary_home_games
            << ',' << row.span_days << ',' << row.no_game_days << ',' << row.rest_days_net << ','
            << row.avg_games_per_day;
        for (const auto& [p, count] : row.streaks) out << ',' << count;
        out << '\n';
    }
    return out.str();
}

std::vector<CompetitiveSummary> summaries_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("", "empty summary CSV");

    std::vector<std::pair<int, int>> patterns;
    {
        std::istringstream header(line);
        std::string field;
        int column = 0;
        while (std::getline(header, field, ',')) {
            if (column++ < 9) continue;
            const auto sep = field.find("in");
            patterns.emplace_back(std::stoi(field.substr(0, sep)), std::stoi(field.substr(sep + 2)));
        }
    }

    std::vector<CompetitiveSummary> rows;
    int team = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> cells;
        while (std::getline(fields, field, ',')) cells.push_back(field);
        if (cells.size() != 9 + patterns.size()) throw ParseError("", "bad summary row '" + line + "'");
        CompetitiveSummary row;
        row.team = team++;
        row.total_travel = std::stoi(cells[2]);
        row.home_games = std::stoi(cells[3]);
        row.secondary_home_games = std::stoi(cells[4]);
        row.span_days = std::stoi(cells[5]);
        row.no_game_days = std::stoi(cells[6]);
        row.rest_days_net = std::stoi(cells[7]);
        row.avg_games_per_day = std::stod(cells[8]);
        for (std::size_t k = 0; k < patterns.size(); ++k) {
            row.streaks[patterns[k]] = std::stoi(cells[9 + k]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace burnout
