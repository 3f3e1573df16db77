#include "burnout/schedule.hpp"

#include <algorithm>
#include <map>

#include "burnout/error.hpp"

namespace burnout {

const Team* TournamentConfig::team_by_abbrev(const std::string& abbrev) const {
    for (const Team& t : teams) {
        if (t.abbrev == abbrev) return &t;
    }
    return nullptr;
}

const Venue* TournamentConfig::venue_by_code(const std::string& code) const {
    for (const Venue& v : venues) {
        if (v.code == code) return &v;
    }
    return nullptr;
}

std::optional<int> TournamentConfig::primary_venue(int team) const {
    auto it = primary_home.find(team);
    if (it == primary_home.end()) return std::nullopt;
    return it->second;
}

std::optional<int> TournamentConfig::secondary_venue(int team) const {
    auto it = secondary_home.find(team);
    if (it == secondary_home.end()) return std::nullopt;
    return it->second;
}

bool TournamentConfig::share_home_venue(int team_a, int team_b) const {
    const auto home_of = [this](int t) -> std::optional<int> {
        if (auto p = primary_venue(t)) return p;
        return secondary_venue(t);
    };
    const auto a = home_of(team_a);
    const auto b = home_of(team_b);
    return a && b && *a == *b;
}

void TournamentConfig::validate() const {
    if (teams.size() < 2) throw ValidationError("config needs at least 2 teams");
    if (rounds < 1) throw ValidationError("rounds must be >= 1");
    if (break_lower > break_upper) throw ValidationError("break bounds require Y <= Z");

    std::set<std::string> abbrevs;
    for (std::size_t i = 0; i < teams.size(); ++i) {
        if (teams[i].id != static_cast<int>(i)) {
            throw ValidationError("team ids must be dense 0..n-1 in declaration order");
        }
        if (!abbrevs.insert(teams[i].abbrev).second) {
            throw ValidationError("duplicate team abbrev '" + teams[i].abbrev + "'");
        }
    }
    std::set<std::string> codes;
    for (std::size_t i = 0; i < venues.size(); ++i) {
        if (venues[i].id != static_cast<int>(i)) {
            throw ValidationError("venue ids must be dense 0..m-1 in declaration order");
        }
        if (!codes.insert(venues[i].code).second) {
            throw ValidationError("duplicate venue code '" + venues[i].code + "'");
        }
        if (venues[i].city.empty()) {
            throw ValidationError("venue '" + venues[i].code + "' has no city");
        }
    }

    const auto venue_ok = [this](int v) { return v >= 0 && v < static_cast<int>(venues.size()); };
    const auto team_ok = [this](int t) { return t >= 0 && t < team_count(); };
    for (const auto& [t, v] : primary_home) {
        if (!team_ok(t) || !venue_ok(v)) throw ValidationError("primary_home references unknown team/venue");
    }
    for (const auto& [t, v] : secondary_home) {
        if (!team_ok(t) || !venue_ok(v)) throw ValidationError("secondary_home references unknown team/venue");
    }
    for (const Team& t : teams) {
        if (!primary_home.count(t.id) && !secondary_home.count(t.id)) {
            throw ValidationError("team '" + t.abbrev + "' has neither primary nor secondary home");
        }
    }
    for (int t : strong_teams) {
        if (!team_ok(t)) throw ValidationError("strong team set references unknown team");
    }

    std::map<Date, int> per_date;
    for (std::size_t i = 0; i < slot_calendar.size(); ++i) {
        const Slot& s = slot_calendar[i];
        if (s.slot_of_day != 0 && s.slot_of_day != 1) {
            throw ValidationError("slot_of_day must be 0 or 1");
        }
        if (++per_date[s.date] > 2) {
            throw ValidationError("more than two slots on " + format_date(s.date));
        }
        if (i > 0 && !(slot_calendar[i - 1] < s)) {
            throw ValidationError("slot calendar must be strictly increasing");
        }
    }
}

bool operator==(const TournamentConfig& a, const TournamentConfig& b) {
    return a.name == b.name && a.teams == b.teams && a.venues == b.venues && a.rounds == b.rounds &&
           a.primary_home == b.primary_home && a.secondary_home == b.secondary_home &&
           a.slot_calendar == b.slot_calendar && a.temporally_constrained == b.temporally_constrained &&
           a.break_lower == b.break_lower && a.break_upper == b.break_upper &&
           a.strong_teams == b.strong_teams && a.availability == b.availability &&
           a.venue_availability == b.venue_availability && a.popularity == b.popularity &&
           a.popularity_cap == b.popularity_cap &&
           a.slot_start_hours[0] == b.slot_start_hours[0] && a.slot_start_hours[1] == b.slot_start_hours[1];
}

DateTime Schedule::game_start(const Game& g) const {
    const Slot& s = config.slot_calendar.at(static_cast<std::size_t>(g.slot));
    return DateTime{s.date, config.slot_start_hours[s.slot_of_day]};
}

void Schedule::validate() const {
    config.validate();
    std::set<std::pair<int, int>> team_slot;
    const Game* prev = nullptr;
    for (const Game& g : games) {
        if (g.home == g.away) throw ValidationError("game pairs a team against itself");
        if (g.home < 0 || g.home >= config.team_count() || g.away < 0 || g.away >= config.team_count()) {
            throw ValidationError("game references unknown team");
        }
        if (g.venue < 0 || g.venue >= static_cast<int>(config.venues.size())) {
            throw ValidationError("game references unknown venue");
        }
        if (g.slot < 0 || g.slot >= config.slot_count()) {
            throw ValidationError("game slot outside calendar bounds");
        }
        for (int t : {g.home, g.away}) {
            if (!team_slot.insert({t, g.slot}).second) {
                throw ValidationError("team '" + config.teams[t].abbrev + "' appears twice in slot " +
                                      std::to_string(g.slot));
            }
        }
        if (prev) {
            const auto key = [this](const Game& g) {
                return std::make_pair(g.slot, config.venues[g.venue].code);
            };
            if (key(*prev) > key(g)) throw ValidationError("games not sorted by (slot, venue code)");
        }
        prev = &g;
    }
}

char designation_code(Designation d) {
    switch (d) {
        case Designation::Home: return 'H';
        case Designation::Away: return 'A';
        case Designation::SecondaryHome: return 'S';
        case Designation::Neutral: return 'N';
    }
    return '?';
}

Designation classify_designation(const TournamentConfig& config, const Game& game) {
    const auto opp_primary = config.primary_venue(game.away);
    if (opp_primary && *opp_primary == game.venue) return Designation::Away;
    const auto own_primary = config.primary_venue(game.home);
    if (own_primary && *own_primary == game.venue) return Designation::Home;
    const auto own_secondary = config.secondary_venue(game.home);
    if (own_secondary && *own_secondary == game.venue) return Designation::SecondaryHome;
    return Designation::Neutral;
}

Designation classify_designation(const Schedule& schedule, const Game& game) {
    return classify_designation(schedule.config, game);
}

bool counts_as_home(const TournamentConfig& config, const Game& game, int team) {
    const Designation d = classify_designation(config, game);
    if (team == game.home) return d == Designation::Home || d == Designation::SecondaryHome;
    return d == Designation::Away;
}

HomeAwayMap home_away_map(const Schedule& schedule) {
    const int n = schedule.config.team_count();
    HomeAwayMap map(static_cast<std::size_t>(n), std::vector<std::optional<Designation>>(static_cast<std::size_t>(n)));
    for (const Game& g : schedule.games) {
        auto& cell = map[static_cast<std::size_t>(g.home)][static_cast<std::size_t>(g.away)];
        if (!cell) cell = classify_designation(schedule.config, g);
    }
    return map;
}

std::vector<const Game*> games_of_team(const Schedule& schedule, int team) {
    std::vector<const Game*> result;
    for (const Game& g : schedule.games) {
        if (g.home == team || g.away == team) result.push_back(&g);
    }
    std::stable_sort(result.begin(), result.end(),
                     [](const Game* a, const Game* b) { return a->slot < b->slot; });
    return result;
}

}  // namespace burnout
