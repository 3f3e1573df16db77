#include "burnout/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "burnout/error.hpp"
#include "burnout/fatigue.hpp"
#include "burnout/metrics.hpp"

namespace burnout {

void ScoreInputs::validate(int team_count) const {
    const auto n = static_cast<std::size_t>(team_count);
    if (rmse.size() != n || prior_avg_fatigue.size() != n || avg_peak_fatigue.size() != n ||
        travel.size() != n || rest_days_net.size() != n || home_points.size() != n) {
        throw ValidationError("score inputs must cover every team");
    }
    for (const auto& series : {rmse, prior_avg_fatigue, avg_peak_fatigue}) {
        for (double v : series) {
            if (!std::isfinite(v)) throw ValidationError("score inputs must be finite");
        }
    }
    for (int t : travel) {
        if (t < 0) throw ValidationError("travel counts must be non-negative");
    }
}

std::map<int, int> rank_points(const std::map<int, double>& values, bool lower_is_better,
                               TiePolicy ties) {
    if (values.size() < 2) throw ValidationError("rank points need at least two teams");
    for (const auto& [team, v] : values) {
        if (!std::isfinite(v)) throw ValidationError("rank points need finite values");
    }

    std::vector<std::pair<double, int>> order;  // (value, team)
    order.reserve(values.size());
    for (const auto& [team, v] : values) order.emplace_back(v, team);
    std::sort(order.begin(), order.end(), [lower_is_better](const auto& a, const auto& b) {
        return lower_is_better ? a.first < b.first : a.first > b.first;
    });

    const int top = static_cast<int>(values.size()) - 1;
    std::map<int, int> points;
    if (ties == TiePolicy::ShareHigher) {
        // Dense ranking: a tie block consumes one rank and keeps its best value.
        int dense_rank = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k > 0 && order[k].first != order[k - 1].first) ++dense_rank;
            points[order[k].second] = top - dense_rank;
        }
    } else {
        // Tie block shares the points of its worst ordinal position.
        for (std::size_t k = 0; k < order.size();) {
            std::size_t end = k;
            while (end + 1 < order.size() && order[end + 1].first == order[k].first) ++end;
            for (std::size_t j = k; j <= end; ++j) points[order[j].second] = top - static_cast<int>(end);
            k = end + 1;
        }
    }
    return points;
}

std::map<int, int> travel_points(const std::map<int, int>& travel) {
    if (travel.empty()) throw ValidationError("travel points need a non-empty map");
    int max_travel = 0;
    for (const auto& [team, t] : travel) max_travel = std::max(max_travel, t);
    std::map<int, int> points;
    for (const auto& [team, t] : travel) points[team] = std::abs(t - max_travel);
    return points;
}

FairnessScorecard score(const ScoreInputs& inputs, int team_count, TiePolicy ties) {
    inputs.validate(team_count);

    const auto as_map = [team_count](const std::vector<double>& v) {
        std::map<int, double> m;
        for (int t = 0; t < team_count; ++t) m[t] = v[static_cast<std::size_t>(t)];
        return m;
    };
    const auto rmse_pts = rank_points(as_map(inputs.rmse), /*lower_is_better=*/true, ties);
    const auto prior_pts = rank_points(as_map(inputs.prior_avg_fatigue), true, ties);
    const auto peak_pts = rank_points(as_map(inputs.avg_peak_fatigue), true, ties);
    std::map<int, int> travel_map;
    for (int t = 0; t < team_count; ++t) travel_map[t] = inputs.travel[static_cast<std::size_t>(t)];
    const auto travel_pts = travel_points(travel_map);

    FairnessScorecard card;
    for (int t = 0; t < team_count; ++t) {
        TeamScore row;
        row.team = t;
        row.items = {rmse_pts.at(t),
                     prior_pts.at(t),
                     peak_pts.at(t),
                     travel_pts.at(t),
                     inputs.rest_days_net[static_cast<std::size_t>(t)],
                     inputs.home_points[static_cast<std::size_t>(t)]};
        for (int k = 0; k < 5; ++k) row.fatigue_subtotal += row.items[static_cast<std::size_t>(k)];
        row.total = row.fatigue_subtotal + row.items[5];
        card.teams.push_back(row);
    }
    const auto best = [&card](auto key) {
        return std::max_element(card.teams.begin(), card.teams.end(),
                                [&key](const TeamScore& a, const TeamScore& b) { return key(a) < key(b); })
            ->team;
    };
    card.most_favored_total = best([](const TeamScore& s) { return s.total; });
    card.most_favored_fatigue = best([](const TeamScore& s) { return s.fatigue_subtotal; });
    return card;
}

ScoreInputs score_inputs_from_schedule(const Schedule& schedule) {
    const int n = schedule.config.team_count();
    ScoreInputs inputs;
    const auto summaries = summarize(schedule);
    for (int t = 0; t < n; ++t) {
        const TeamItinerary it = itinerary(schedule, t);
        inputs.rmse.push_back(rest_rmse(rest_utilization(it)));
        const FatigueTimeline tl = build_timeline(schedule, t);
        inputs.prior_avg_fatigue.push_back(prior_avg_fatigue(tl));
        inputs.avg_peak_fatigue.push_back(avg_peak_fatigue(tl));
        const CompetitiveSummary& row = summaries[static_cast<std::size_t>(t)];
        inputs.travel.push_back(row.total_travel);
        inputs.rest_days_net.push_back(row.rest_days_net);
        const bool no_home_venue = !schedule.config.primary_venue(t).has_value();
        inputs.home_points.push_back(no_home_venue ? row.secondary_home_games : row.home_games);
    }
    return inputs;
}

std::string scorecard_to_csv(const TournamentConfig& config, const FairnessScorecard& card) {
    std::ostringstream out;
    out << "team,rmse_points,prior_fatigue_points,peak_fatigue_points,travel_points,"
           "rest_day_points,home_game_points,fatigue_points,total_points\n";
    for (const TeamScore& row : card.teams) {
        out << config.teams[static_cast<std::size_t>(row.team)].abbrev;
        for (int item : row.items) out << ',' << item;
        out << ',' << row.fatigue_subtotal << ',' << row.total << '\n';
    }
    return out.str();
}

std::vector<TeamScore> scorecard_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("", "empty scorecard CSV");
    std::vector<TeamScore> rows;
    int team = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        if (cells.size() != 9) throw ParseError("", "bad scorecard row '" + line + "'");
        TeamScore row;
        row.team = team++;
        for (int k = 0; k < 6; ++k) row.items[static_cast<std::size_t>(k)] = std::stoi(cells[static_cast<std::size_t>(k) + 1]);
        row.fatigue_subtotal = std::stoi(cells[7]);
        row.total = std::stoi(cells[8]);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace burnout
