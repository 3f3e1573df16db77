#include "burnout/constraints.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "burnout/error.hpp"

namespace burnout {

namespace {

Violation make_violation(ConstraintId id, std::vector<int> teams, std::vector<int> slots,
                         std::string detail, long measured, long bound) {
    return Violation{id, std::move(teams), std::move(slots), std::move(detail), measured, bound};
}

/// Per-team chronological (slot, home-status) sequence.
std::vector<std::pair<int, bool>> status_sequence(const Schedule& schedule, int team) {
    std::vector<std::pair<int, bool>> seq;
    for (const Game* g : games_of_team(schedule, team)) {
        seq.emplace_back(g->slot, counts_as_home(schedule.config, *g, team));
    }
    return seq;
}

}  // namespace

const std::vector<ConstraintId>& all_constraints() {
    static const std::vector<ConstraintId> ids = {
        ConstraintId::SingleRoundRobin, ConstraintId::MultiRoundRobin,  ConstraintId::VenueBalance,
        ConstraintId::OneGamePerSlot,   ConstraintId::ConsecutiveHome,  ConstraintId::ConsecutiveAway,
        ConstraintId::BreakSlotSecond,  ConstraintId::BreakSlotLast,    ConstraintId::StrongTeam,
        ConstraintId::Complementary,    ConstraintId::PopularityCap,    ConstraintId::PlayerAvailability,
        ConstraintId::Place,
    };
    return ids;
}

std::string constraint_name(ConstraintId id) {
    switch (id) {
        case ConstraintId::SingleRoundRobin: return "srr";
        case ConstraintId::MultiRoundRobin: return "mrr";
        case ConstraintId::VenueBalance: return "venue_balance";
        case ConstraintId::OneGamePerSlot: return "one_game_per_slot";
        case ConstraintId::ConsecutiveHome: return "consec_home";
        case ConstraintId::ConsecutiveAway: return "consec_away";
        case ConstraintId::BreakSlotSecond: return "break_slot_second";
        case ConstraintId::BreakSlotLast: return "break_slot_last";
        case ConstraintId::StrongTeam: return "strong_team";
        case ConstraintId::Complementary: return "complementary";
        case ConstraintId::PopularityCap: return "popularity_cap";
        case ConstraintId::PlayerAvailability: return "player_availability";
        case ConstraintId::Place: return "place";
    }
    return "unknown";
}

ConstraintId constraint_from_name(const std::string& name) {
    for (ConstraintId id : all_constraints()) {
        if (constraint_name(id) == name) return id;
    }
    throw ValidationError("unknown constraint '" + name + "'");
}

IncidenceTensor::IncidenceTensor(int teams, int slots) : teams_(teams), slots_(slots) {
    bits_.assign(static_cast<std::size_t>(teams) * teams * slots, 0);
}

std::size_t IncidenceTensor::index(int home, int away, int slot) const {
    return (static_cast<std::size_t>(home) * teams_ + away) * slots_ + slot;
}

int IncidenceTensor::hosting_count(int home, int away) const {
    int count = 0;
    for (int f = 0; f < slots_; ++f) count += at(home, away, f);
    return count;
}

int IncidenceTensor::meeting_count(int a, int b) const {
    return hosting_count(a, b) + hosting_count(b, a);
}

std::vector<IncidenceTensor::TeamGame> IncidenceTensor::team_games(int team) const {
    std::vector<TeamGame> games;
    for (int f = 0; f < slots_; ++f) {
        for (int other = 0; other < teams_; ++other) {
            if (other == team) continue;
            if (at(team, other, f)) games.push_back({f, other, true});
            if (at(other, team, f)) games.push_back({f, other, false});
        }
    }
    std::sort(games.begin(), games.end(),
              [](const TeamGame& a, const TeamGame& b) { return a.slot < b.slot; });
    return games;
}

long long IncidenceTensor::total() const {
    long long sum = 0;
    for (unsigned char b : bits_) sum += b;
    return sum;
}

IncidenceTensor build_incidence(const Schedule& schedule) {
    IncidenceTensor x(schedule.config.team_count(), schedule.config.slot_count());
    for (const Game& g : schedule.games) x.set(g.home, g.away, g.slot, true);
    return x;
}

std::vector<Violation> check_single_rr(const IncidenceTensor& x) {
    std::vector<Violation> out;
    for (int i = 0; i < x.teams(); ++i) {
        for (int j = i + 1; j < x.teams(); ++j) {
            const int count = x.meeting_count(i, j);
            if (count != 1) {
                out.push_back(make_violation(ConstraintId::SingleRoundRobin, {i, j}, {},
                                             "pair meets " + std::to_string(count) + " times, needs 1",
                                             count, 1));
            }
        }
    }
    return out;
}

std::vector<Violation> check_multi_rr(const IncidenceTensor& x, int rounds) {
    if (rounds < 1) throw ValidationError("round-robin needs rounds >= 1");
    std::vector<Violation> out;
    for (int i = 0; i < x.teams(); ++i) {
        for (int j = i + 1; j < x.teams(); ++j) {
            const int count = x.meeting_count(i, j);
            if (count != rounds) {
                out.push_back(make_violation(ConstraintId::MultiRoundRobin, {i, j}, {},
                                             "pair meets " + std::to_string(count) + " times, needs " +
                                                 std::to_string(rounds),
                                             count, rounds));
            }
        }
    }
    return out;
}

std::vector<Violation> check_venue_balance(const IncidenceTensor& x, int rounds) {
    if (rounds < 1) throw ValidationError("venue balance needs rounds >= 1");
    const int floor_half = rounds / 2;
    std::vector<Violation> out;
    for (int i = 0; i < x.teams(); ++i) {
        for (int j = 0; j < x.teams(); ++j) {
            if (i == j) continue;
            const int count = x.hosting_count(i, j);
            if (count < floor_half) {
                out.push_back(make_violation(ConstraintId::VenueBalance, {i, j}, {},
                                             "team hosts opponent " + std::to_string(count) +
                                                 " times, needs at least " + std::to_string(floor_half),
                                             count, floor_half));
            }
        }
    }
    return out;
}

std::vector<Violation> check_one_game_per_slot(const IncidenceTensor& x, bool temporally_constrained) {
    std::vector<Violation> out;
    for (int t = 0; t < x.teams(); ++t) {
        for (int f = 0; f < x.slots(); ++f) {
            int count = 0;
            for (int o = 0; o < x.teams(); ++o) {
                if (o == t) continue;
                count += x.at(t, o, f) + x.at(o, t, f);
            }
            const bool bad = temporally_constrained ? count != 1 : count > 1;
            if (bad) {
                out.push_back(make_violation(ConstraintId::OneGamePerSlot, {t}, {f},
                                             "team plays " + std::to_string(count) + " games in slot",
                                             count, 1));
            }
        }
    }
    return out;
}

std::vector<Violation> check_consecutive_bounds(const Schedule& schedule, int lower, int upper) {
    if (lower > upper) throw ValidationError("consecutive bounds need Y <= Z");
    std::vector<Violation> out;
    for (const Team& team : schedule.config.teams) {
        const auto seq = status_sequence(schedule, team.id);
        std::size_t k = 0;
        while (k < seq.size()) {
            std::size_t end = k;
            while (end + 1 < seq.size() && seq[end + 1].second == seq[k].second) ++end;
            const int run = static_cast<int>(end - k + 1);
            if (run < lower || run > upper) {
                std::vector<int> slots;
                for (std::size_t p = k; p <= end; ++p) slots.push_back(seq[p].first);
                const ConstraintId id =
                    seq[k].second ? ConstraintId::ConsecutiveHome : ConstraintId::ConsecutiveAway;
                out.push_back(make_violation(
                    id, {team.id}, slots,
                    std::string(seq[k].second ? "home" : "away") + " run of " + std::to_string(run) +
                        " outside [" + std::to_string(lower) + ", " + std::to_string(upper) + "]",
                    run, run > upper ? upper : lower));
            }
            k = end + 1;
        }
    }
    return out;
}

std::vector<Violation> check_break_slots(const Schedule& schedule) {
    std::vector<Violation> out;
    for (const Team& team : schedule.config.teams) {
        const auto seq = status_sequence(schedule, team.id);
        if (seq.size() < 2) continue;
        if (seq[0].second == seq[1].second) {
            out.push_back(make_violation(ConstraintId::BreakSlotSecond, {team.id},
                                         {seq[0].first, seq[1].first},
                                         "break across the team's first two games", 2, 1));
        }
        const std::size_t last = seq.size() - 1;
        if (last >= 2 && seq[last - 1].second == seq[last].second) {
            out.push_back(make_violation(ConstraintId::BreakSlotLast, {team.id},
                                         {seq[last - 1].first, seq[last].first},
                                         "break across the team's last two games", 2, 1));
        }
    }
    return out;
}

std::vector<Violation> check_strong_team(const Schedule& schedule, const std::set<int>& strong) {
    std::vector<Violation> out;
    for (const Team& team : schedule.config.teams) {
        const auto games = games_of_team(schedule, team.id);
        for (std::size_t k = 0; k + 1 < games.size(); ++k) {
            const int opp_a = games[k]->home == team.id ? games[k]->away : games[k]->home;
            const int opp_b = games[k + 1]->home == team.id ? games[k + 1]->away : games[k + 1]->home;
            if (strong.count(opp_a) && strong.count(opp_b)) {
                out.push_back(make_violation(ConstraintId::StrongTeam, {team.id, opp_a, opp_b},
                                             {games[k]->slot, games[k + 1]->slot},
                                             "consecutive games against strong opponents", 2, 1));
            }
        }
    }
    return out;
}

std::vector<Violation> check_complementary(const Schedule& schedule) {
    std::vector<Violation> out;
    const int n = schedule.config.team_count();
    std::map<int, std::set<int>> designated_home_slots;
    for (const Game& g : schedule.games) designated_home_slots[g.home].insert(g.slot);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!schedule.config.share_home_venue(a, b)) continue;
            for (int slot : designated_home_slots[a]) {
                if (designated_home_slots[b].count(slot)) {
                    out.push_back(make_violation(ConstraintId::Complementary, {a, b}, {slot},
                                                 "venue-sharing teams both designated home in slot", 2,
                                                 1));
                }
            }
        }
    }
    return out;
}

std::vector<Violation> check_popularity_cap(const Schedule& schedule,
                                            const std::map<std::pair<int, int>, int>& popularity,
                                            int popularity_cap) {
    if (popularity_cap < 0) throw ValidationError("popularity cap must be non-negative");
    std::map<int, long> per_slot;
    for (const Game& g : schedule.games) {
        const auto it = popularity.find({g.home, g.away});
        if (it != popularity.end()) per_slot[g.slot] += it->second;
    }
    std::vector<Violation> out;
    for (const auto& [slot, sum] : per_slot) {
        if (sum > popularity_cap) {
            out.push_back(make_violation(ConstraintId::PopularityCap, {}, {slot},
                                         "attractive-game weight " + std::to_string(sum) +
                                             " exceeds cap " + std::to_string(popularity_cap),
                                         sum, popularity_cap));
        }
    }
    return out;
}

std::vector<Violation> check_player_availability(
    const Schedule& schedule, const std::map<std::pair<int, int>, std::set<int>>& availability) {
    std::vector<Violation> out;
    for (const Game& g : schedule.games) {
        const auto it = availability.find({g.home, g.away});
        if (it == availability.end()) continue;
        if (!it->second.count(g.slot)) {
            out.push_back(make_violation(ConstraintId::PlayerAvailability, {g.home, g.away}, {g.slot},
                                         "game scheduled outside its availability slots", g.slot, -1));
        }
    }
    return out;
}

std::vector<Violation> check_place(const Schedule& schedule,
                                   const std::map<int, std::set<int>>& venue_availability) {
    std::vector<Violation> out;
    for (const Game& g : schedule.games) {
        const auto it = venue_availability.find(g.home);
        if (it == venue_availability.end()) continue;
        if (!it->second.count(g.slot)) {
            out.push_back(make_violation(ConstraintId::Place, {g.home}, {g.slot},
                                         "designated-home game outside the team's venue slots", g.slot,
                                         -1));
        }
    }
    return out;
}

ViolationReport validate_all(const Schedule& schedule, const std::set<ConstraintId>& selection) {
    if (selection.empty()) throw ValidationError("constraint selection must not be empty");
    const IncidenceTensor x = build_incidence(schedule);
    const TournamentConfig& config = schedule.config;

    ViolationReport report;
    report.checked = selection;
    const auto add = [&report](std::vector<Violation> v) {
        report.violations.insert(report.violations.end(), v.begin(), v.end());
    };
    const bool wants_consecutive =
        selection.count(ConstraintId::ConsecutiveHome) || selection.count(ConstraintId::ConsecutiveAway);

    for (ConstraintId id : selection) {
        switch (id) {
            case ConstraintId::SingleRoundRobin: add(check_single_rr(x)); break;
            case ConstraintId::MultiRoundRobin: add(check_multi_rr(x, config.rounds)); break;
            case ConstraintId::VenueBalance: add(check_venue_balance(x, config.rounds)); break;
            case ConstraintId::OneGamePerSlot:
                add(check_one_game_per_slot(x, config.temporally_constrained));
                break;
            case ConstraintId::ConsecutiveHome:
            case ConstraintId::ConsecutiveAway:
                break;  // handled once below
            case ConstraintId::BreakSlotSecond:
            case ConstraintId::BreakSlotLast:
                break;  // handled once below
            case ConstraintId::StrongTeam: add(check_strong_team(schedule, config.strong_teams)); break;
            case ConstraintId::Complementary: add(check_complementary(schedule)); break;
            case ConstraintId::PopularityCap:
                add(check_popularity_cap(schedule, config.popularity, config.popularity_cap));
                break;
            case ConstraintId::PlayerAvailability:
                add(check_player_availability(schedule, config.availability));
                break;
            case ConstraintId::Place: add(check_place(schedule, config.venue_availability)); break;
        }
    }
    if (wants_consecutive) {
        for (Violation& v : check_consecutive_bounds(schedule, config.break_lower, config.break_upper)) {
            if (selection.count(v.constraint)) report.violations.push_back(std::move(v));
        }
    }
    if (selection.count(ConstraintId::BreakSlotSecond) || selection.count(ConstraintId::BreakSlotLast)) {
        for (Violation& v : check_break_slots(schedule)) {
            if (selection.count(v.constraint)) report.violations.push_back(std::move(v));
        }
    }

    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& a, const Violation& b) {
                  const int sa = a.slots.empty() ? -1 : a.slots.front();
                  const int sb = b.slots.empty() ? -1 : b.slots.front();
                  const int ta = a.teams.empty() ? -1 : a.teams.front();
                  const int tb = b.teams.empty() ? -1 : b.teams.front();
                  return std::tie(a.constraint, sa, ta, a.detail) <
                         std::tie(b.constraint, sb, tb, b.detail);
              });
    return report;
}

std::string report_to_json(const Schedule& schedule, const ViolationReport& report) {
    nlohmann::json j;
    j["passed"] = report.passed();
    j["checked"] = nlohmann::json::array();
    for (ConstraintId id : report.checked) j["checked"].push_back(constraint_name(id));
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : report.violations) {
        nlohmann::json jv;
        jv["constraint"] = constraint_name(v.constraint);
        jv["teams"] = nlohmann::json::array();
        for (int t : v.teams) jv["teams"].push_back(schedule.config.teams[static_cast<std::size_t>(t)].abbrev);
        jv["slots"] = v.slots;
        jv["detail"] = v.detail;
        jv["measured"] = v.measured;
        jv["bound"] = v.bound;
        j["violations"].push_back(std::move(jv));
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const Schedule& schedule, const ViolationReport& report) {
    std::ostringstream out;
    out << (report.passed() ? "PASSED" : "FAILED") << " (" << report.violations.size()
        << " violations, " << report.checked.size() << " constraints checked)\n";
    for (const Violation& v : report.violations) {
        out << "  [" << constraint_name(v.constraint) << "]";
        if (!v.teams.empty()) {
            out << " teams";
            for (int t : v.teams) out << ' ' << schedule.config.teams[static_cast<std::size_t>(t)].abbrev;
        }
        if (!v.slots.empty()) {
            out << " slots";
            for (int s : v.slots) out << ' ' << s;
        }
        out << ": " << v.detail << '\n';
    }
    return out.str();
}

}  // namespace burnout
