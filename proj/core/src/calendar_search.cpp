#include "burnout/calendar_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "burnout/error.hpp"
#include "burnout/fatigue.hpp"
#include "burnout/metrics.hpp"

namespace burnout {

namespace {

/// Greedy streak count over a day bitmask (bit d set = game on day d).
/// Mirrors metrics::streak_count; the tool cross-checks accepted patterns
/// against the real implementation.
int greedy_streaks(std::uint64_t day_mask, int first, int last, int x_games, int y_days) {
    int count = 0;
    std::vector<std::uint64_t> counted;
    const std::uint64_t window_base = y_days >= 64 ? ~0ull : ((1ull << y_days) - 1);
    for (int s = first; s <= last; ++s) {
        const std::uint64_t w = day_mask & (window_base << s);
        if (std::popcount(w) < x_games) continue;
        bool covered = false;
        for (std::uint64_t prior : counted) {
            if ((w & ~prior) == 0) {
                covered = true;
                break;
            }
        }
        if (covered) continue;
        counted.push_back(w);
        ++count;
    }
    return count;
}

/// All game-day patterns of one team satisfying its exact streak targets:
/// `games` days inside [1, horizon], span exactly games + no_game_days,
/// first and last day occupied.
std::vector<std::vector<int>> feasible_patterns(int games, const TeamTargets& target, int horizon) {
    std::vector<std::vector<int>> result;
    const int span = games + target.no_game_days;
    if (span < games || span > horizon) return result;

    const auto check = [&](const std::vector<int>& days) {
        std::uint64_t mask = 0;
        for (int d : days) mask |= 1ull << d;
        for (const auto& [pattern, count] : target.streaks) {
            if (pattern.first > games) {
                if (count != 0) return false;
                continue;
            }
            if (greedy_streaks(mask, days.front(), days.back(), pattern.first, pattern.second) != count) {
                return false;
            }
        }
        return true;
    };

    for (int first = 1; first + span - 1 <= horizon; ++first) {
        const int last = first + span - 1;
        if (games == 1) {
            if (span == 1) {
                std::vector<int> days{first};
                if (check(days)) result.push_back(days);
            }
            continue;
        }
        // Choose the interior game days between first and last.
        const int interior = games - 2;
        std::vector<int> pick(static_cast<std::size_t>(interior));
        for (int k = 0; k < interior; ++k) pick[static_cast<std::size_t>(k)] = first + 1 + k;
        while (true) {
            std::vector<int> days;
            days.push_back(first);
            days.insert(days.end(), pick.begin(), pick.end());
            days.push_back(last);
            if (check(days)) result.push_back(days);

            // Next combination in lexicographic order.
            int k = interior - 1;
            while (k >= 0 && pick[static_cast<std::size_t>(k)] == last - (interior - k)) --k;
            if (k < 0) break;
            ++pick[static_cast<std::size_t>(k)];
            for (int m = k + 1; m < interior; ++m) {
                pick[static_cast<std::size_t>(m)] = pick[static_cast<std::size_t>(m - 1)] + 1;
            }
        }
    }
    return result;
}

struct TeamState {
    int total = 0;
    int placed = 0;
    std::vector<int> days;
    std::vector<int> hours;
    std::vector<int> active;  // indices into the team's pattern list
};

class Searcher {
public:
    Searcher(const CalendarProblem& problem, const TournamentConfig& config)
        : problem_(problem), config_(config), n_(config.team_count()) {
        const int games = static_cast<int>(problem.games.size());
        placed_.assign(static_cast<std::size_t>(games), 0);
        day_of_game_.assign(static_cast<std::size_t>(games), 0);
        slot_of_game_.assign(static_cast<std::size_t>(games), 1);
        state_.resize(static_cast<std::size_t>(n_));
        metrics_final_.assign(static_cast<std::size_t>(n_), false);
        patterns_.resize(static_cast<std::size_t>(n_));

        for (const GameSpec& g : problem.games) {
            ++state_[static_cast<std::size_t>(g.home)].total;
            ++state_[static_cast<std::size_t>(g.away)].total;
        }
        calendar0_ = config.slot_calendar.front().date;
    }

    std::optional<CalendarSolution> run() {
        for (int t = 0; t < n_; ++t) {
            auto& st = state_[static_cast<std::size_t>(t)];
            patterns_[static_cast<std::size_t>(t)] = feasible_patterns(
                st.total, problem_.targets[static_cast<std::size_t>(t)], problem_.horizon_days);
            if (patterns_[static_cast<std::size_t>(t)].empty()) return std::nullopt;
            st.active.resize(patterns_[static_cast<std::size_t>(t)].size());
            for (std::size_t k = 0; k < st.active.size(); ++k) st.active[k] = static_cast<int>(k);
        }
        if (dfs(1)) {
            CalendarSolution sol;
            sol.day_of_game = day_of_game_;
            sol.slot_of_game = slot_of_game_;
            sol.candidates_tested = tested_;
            return sol;
        }
        return std::nullopt;
    }

private:
    const CalendarProblem& problem_;
    const TournamentConfig& config_;
    int n_;
    Date calendar0_;
    std::vector<std::vector<std::vector<int>>> patterns_;  // per team
    std::vector<TeamState> state_;
    std::vector<char> placed_;
    std::vector<int> day_of_game_;
    std::vector<int> slot_of_game_;
    std::vector<char> metrics_final_;
    std::map<std::pair<MetricKind, int>, double> metric_value_;
    long long tested_ = 0;
    int games_placed_ = 0;

    int remaining(int t) const {
        const auto& st = state_[static_cast<std::size_t>(t)];
        return st.total - st.placed;
    }

    int next_venue(int t) const {
        const auto& order = problem_.venue_order[static_cast<std::size_t>(t)];
        return order[static_cast<std::size_t>(state_[static_cast<std::size_t>(t)].placed)];
    }

    int pattern_next_day(int t, int pattern) const {
        const auto& st = state_[static_cast<std::size_t>(t)];
        return patterns_[static_cast<std::size_t>(t)][static_cast<std::size_t>(pattern)]
                        [static_cast<std::size_t>(st.placed)];
    }

    /// One pass over a team's surviving patterns: can it play today, can it
    /// idle today.
    std::pair<bool, bool> play_wait_options(int t, int day) const {
        if (remaining(t) == 0) return {false, true};
        bool play = false;
        bool wait = false;
        const auto& st = state_[static_cast<std::size_t>(t)];
        for (int p : st.active) {
            const int next = pattern_next_day(t, p);
            play = play || next == day;
            wait = wait || next > day;
            if (play && wait) break;
        }
        return {play, wait};
    }

    void finalize_metrics(int t) {
        const auto& st = state_[static_cast<std::size_t>(t)];
        TeamItinerary it;
        it.team = t;
        std::vector<FatigueEvent> events;
        for (std::size_t k = 0; k < st.days.size(); ++k) {
            const Date date = calendar0_ + (st.days[k] - 1);
            it.dates.push_back(date);
            events.push_back({EventKind::Play, DateTime{date, st.hours[k]}});
        }
        const auto& venue_order = problem_.venue_order[static_cast<std::size_t>(t)];
        for (std::size_t k = 0; k + 1 < venue_order.size(); ++k) {
            const auto& a = config_.venues[static_cast<std::size_t>(venue_order[k])];
            const auto& b = config_.venues[static_cast<std::size_t>(venue_order[k + 1])];
            if (a.city == b.city) continue;
            const int gap_day = st.days[k] + 1;
            const int travel_day = gap_day < st.days[k + 1] ? gap_day : st.days[k + 1];
            events.push_back({EventKind::Travel, DateTime{calendar0_ + (travel_day - 1), 10}});
        }
        std::sort(events.begin(), events.end(),
                  [](const FatigueEvent& a, const FatigueEvent& b) { return a.start < b.start; });
        const FatigueTimeline tl = superpose(events, DateTime{calendar0_, 0});

        metric_value_[{MetricKind::RestRmse, t}] = rest_rmse(rest_utilization(it));
        metric_value_[{MetricKind::PriorAvgFatigue, t}] = prior_avg_fatigue(tl);
        metric_value_[{MetricKind::AvgPeakFatigue, t}] = avg_peak_fatigue(tl);
        metric_value_[{MetricKind::MaxFatigue, t}] = max_fatigue(tl);
        metric_value_[{MetricKind::PeakSeparation, t}] =
            st.days.size() > 1 ? peak_separation_hours(tl) : 0.0;
        metrics_final_[static_cast<std::size_t>(t)] = true;
    }

    bool metric_constraints_ok() const {
        for (const MetricConstraint& c : problem_.order_constraints) {
            if (!metrics_final_[static_cast<std::size_t>(c.lesser_team)] ||
                !metrics_final_[static_cast<std::size_t>(c.greater_team)]) {
                continue;
            }
            const double lo = metric_value_.at({c.metric, c.lesser_team});
            const double hi = metric_value_.at({c.metric, c.greater_team});
            if (c.strict ? !(lo < hi) : !(lo <= hi)) return false;
        }
        for (const MetricFloor& f : problem_.floors) {
            if (!metrics_final_[static_cast<std::size_t>(f.team)]) continue;
            if (!(metric_value_.at({f.metric, f.team}) > f.min_value)) return false;
        }
        return true;
    }

    std::vector<int> available_games(const std::vector<char>& can_play) const {
        std::vector<int> avail;
        std::vector<char> seen_pair(
            static_cast<std::size_t>(n_ * n_) * config_.venues.size(), 0);
        for (std::size_t g = 0; g < problem_.games.size(); ++g) {
            if (placed_[g]) continue;
            const GameSpec& spec = problem_.games[g];
            // Identical (pair, venue) fixtures are interchangeable for dating;
            // only the first unplaced one is offered.
            const int a = std::min(spec.home, spec.away);
            const int b = std::max(spec.home, spec.away);
            const std::size_t key =
                (static_cast<std::size_t>(a) * n_ + b) * config_.venues.size() + spec.venue;
            if (seen_pair[key]) continue;
            seen_pair[key] = 1;
            if (!can_play[static_cast<std::size_t>(spec.home)] ||
                !can_play[static_cast<std::size_t>(spec.away)]) {
                continue;
            }
            if (next_venue(spec.home) != spec.venue || next_venue(spec.away) != spec.venue) continue;
            avail.push_back(static_cast<int>(g));
        }
        return avail;
    }

    void place(int game, int day, int hour) {
        const GameSpec& spec = problem_.games[static_cast<std::size_t>(game)];
        placed_[static_cast<std::size_t>(game)] = 1;
        day_of_game_[static_cast<std::size_t>(game)] = day;
        slot_of_game_[static_cast<std::size_t>(game)] =
            hour == config_.slot_start_hours[0] ? 0 : 1;
        ++games_placed_;
        for (int t : {spec.home, spec.away}) {
            auto& st = state_[static_cast<std::size_t>(t)];
            st.days.push_back(day);
            st.hours.push_back(hour);
            ++st.placed;
        }
    }

    void unplace(int game) {
        const GameSpec& spec = problem_.games[static_cast<std::size_t>(game)];
        placed_[static_cast<std::size_t>(game)] = 0;
        day_of_game_[static_cast<std::size_t>(game)] = 0;
        --games_placed_;
        for (int t : {spec.home, spec.away}) {
            auto& st = state_[static_cast<std::size_t>(t)];
            st.days.pop_back();
            st.hours.pop_back();
            --st.placed;
            metrics_final_[static_cast<std::size_t>(t)] = false;
        }
    }

    /// Kick-off hours: a lone game starts in the evening slot; a double
    /// header fills the afternoon slot first. `swapped` flips which of the
    /// two games opens the day.
    std::vector<std::pair<int, int>> with_hours(const std::vector<int>& games, bool swapped) const {
        std::vector<int> sorted = games;
        std::sort(sorted.begin(), sorted.end());
        if (swapped && sorted.size() == 2) std::swap(sorted[0], sorted[1]);
        std::vector<std::pair<int, int>> result;
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            const bool afternoon = sorted.size() == 2 && k == 0;
            result.emplace_back(sorted[k], config_.slot_start_hours[afternoon ? 0 : 1]);
        }
        return result;
    }

    bool try_day(int day, const std::vector<int>& games, bool swapped) {
        ++tested_;
        if (problem_.max_nodes > 0 && tested_ > problem_.max_nodes) {
            throw ValidationError("calendar search node budget exceeded");
        }
        const auto dated = with_hours(games, swapped);
        for (const auto& [g, hour] : dated) place(g, day, hour);

        // Narrow every team's pattern set by today's outcome.
        std::vector<std::vector<int>> saved_active(static_cast<std::size_t>(n_));
        bool ok = true;
        for (int t = 0; t < n_ && ok; ++t) {
            auto& st = state_[static_cast<std::size_t>(t)];
            saved_active[static_cast<std::size_t>(t)] = st.active;
            if (remaining(t) == 0 && st.placed > 0) continue;  // done; active set irrelevant
            const bool played_today = !st.days.empty() && st.days.back() == day &&
                                      std::find_if(dated.begin(), dated.end(), [&](const auto& gh) {
                                          const GameSpec& spec =
                                              problem_.games[static_cast<std::size_t>(gh.first)];
                                          return spec.home == t || spec.away == t;
                                      }) != dated.end();
            std::vector<int> narrowed;
            for (int p : st.active) {
                const auto& pat =
                    patterns_[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
                if (played_today) {
                    // The day just consumed must sit at position placed-1.
                    if (pat[static_cast<std::size_t>(st.placed - 1)] == day) narrowed.push_back(p);
                } else {
                    if (st.placed < st.total && pat[static_cast<std::size_t>(st.placed)] > day) {
                        narrowed.push_back(p);
                    }
                }
            }
            if (st.placed < st.total || played_today) {
                st.active = std::move(narrowed);
                if (st.active.empty()) ok = false;
            }
        }

        if (ok) {
            for (const auto& [g, hour] : dated) {
                const GameSpec& spec = problem_.games[static_cast<std::size_t>(g)];
                for (int t : {spec.home, spec.away}) {
                    if (remaining(t) == 0 && !metrics_final_[static_cast<std::size_t>(t)]) {
                        finalize_metrics(t);
                    }
                }
            }
            ok = metric_constraints_ok();
        }
        if (ok && dfs(day + 1)) return true;

        for (int t = 0; t < n_; ++t) {
            state_[static_cast<std::size_t>(t)].active = std::move(saved_active[static_cast<std::size_t>(t)]);
        }
        for (auto it = dated.rbegin(); it != dated.rend(); ++it) unplace(it->first);
        return false;
    }

    bool dfs(int day) {
        if (games_placed_ == static_cast<int>(problem_.games.size())) {
            if (problem_.accept) {
                return problem_.accept(
                    realize_schedule(problem_, day_of_game_, slot_of_game_, config_));
            }
            return true;
        }
        if (day > problem_.horizon_days) return false;

        const int rem_days = problem_.horizon_days - day + 1;
        const int rem_games = static_cast<int>(problem_.games.size()) - games_placed_;
        if (rem_games > problem_.max_games_per_day * rem_days) return false;

        std::vector<char> can_play(static_cast<std::size_t>(n_), 0);
        std::vector<int> forced;
        for (int t = 0; t < n_; ++t) {
            if (remaining(t) == 0) continue;
            const auto [play, wait] = play_wait_options(t, day);
            if (!play && !wait) return false;
            can_play[static_cast<std::size_t>(t)] = play;
            if (!wait) forced.push_back(t);
        }
        if (static_cast<int>(forced.size()) > 2 * problem_.max_games_per_day) return false;

        const std::vector<int> avail = available_games(can_play);
        const auto covers_forced = [&](const std::vector<int>& games) {
            for (int t : forced) {
                bool covered = false;
                for (int g : games) {
                    const GameSpec& spec = problem_.games[static_cast<std::size_t>(g)];
                    if (spec.home == t || spec.away == t) covered = true;
                }
                if (!covered) return false;
            }
            return true;
        };

        // Double headers first (both slot orders), then singles, then an
        // empty day.
        for (std::size_t a = 0; a < avail.size(); ++a) {
            const GameSpec& ga = problem_.games[static_cast<std::size_t>(avail[a])];
            for (std::size_t b = a + 1; b < avail.size(); ++b) {
                const GameSpec& gb = problem_.games[static_cast<std::size_t>(avail[b])];
                if (ga.home == gb.home || ga.home == gb.away || ga.away == gb.home ||
                    ga.away == gb.away) {
                    continue;
                }
                const std::vector<int> games = {avail[a], avail[b]};
                if (!covers_forced(games)) continue;
                if (try_day(day, games, false)) return true;
                if (try_day(day, games, true)) return true;
            }
        }
        if (rem_games <= 2 * (rem_days - 1) + 1) {
            for (int g : avail) {
                const std::vector<int> games = {g};
                if (!covers_forced(games)) continue;
                if (try_day(day, games, false)) return true;
            }
        }
        if (forced.empty() && rem_games <= 2 * (rem_days - 1)) {
            if (try_day(day, {}, false)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<CalendarSolution> reconstruct_calendar(const CalendarProblem& problem,
                                                     const TournamentConfig& config) {
    if (problem.horizon_days < 1) throw ValidationError("horizon must be at least one day");
    if (problem.horizon_days > 60) throw ValidationError("horizon too large for day-mask search");
    if (problem.targets.size() != static_cast<std::size_t>(config.team_count())) {
        throw ValidationError("calendar targets must cover every team");
    }
    if (problem.venue_order.size() != static_cast<std::size_t>(config.team_count())) {
        throw ValidationError("venue order must cover every team");
    }
    // The calendar the days map onto must be dense: two slots per day from
    // the first date on.
    if (config.slot_count() < 2 * problem.horizon_days) {
        throw ValidationError("config slot calendar shorter than the search horizon");
    }
    const Date d0 = config.slot_calendar.front().date;
    for (int day = 0; day < problem.horizon_days; ++day) {
        for (int s = 0; s < 2; ++s) {
            const Slot& slot = config.slot_calendar[static_cast<std::size_t>(day * 2 + s)];
            if (slot.date != d0 + day || slot.slot_of_day != s) {
                throw ValidationError("slot calendar must be dense (two slots per day) for reconstruction");
            }
        }
    }
    // Per-team game multiset must match the required venue orders.
    for (int t = 0; t < config.team_count(); ++t) {
        std::map<int, int> from_games;
        for (const GameSpec& g : problem.games) {
            if (g.home == t || g.away == t) ++from_games[g.venue];
        }
        std::map<int, int> from_order;
        for (int v : problem.venue_order[static_cast<std::size_t>(t)]) ++from_order[v];
        if (from_games != from_order) {
            throw ValidationError("venue order of team " + config.teams[static_cast<std::size_t>(t)].abbrev +
                                  " does not match the game list");
        }
    }

    Searcher searcher(problem, config);
    return searcher.run();
}

Schedule realize_schedule(const CalendarProblem& problem, const std::vector<int>& day_of_game,
                          const std::vector<int>& slot_of_game, const TournamentConfig& config) {
    std::vector<Game> games;
    for (std::size_t g = 0; g < problem.games.size(); ++g) {
        const GameSpec& spec = problem.games[g];
        const int slot = (day_of_game[g] - 1) * 2 + slot_of_game[g];
        games.push_back(Game{spec.home, spec.away, spec.venue, slot});
    }
    std::sort(games.begin(), games.end(), [](const Game& a, const Game& b) { return a.slot < b.slot; });
    Schedule schedule{config, std::move(games)};
    schedule.validate();
    return schedule;
}

}  // namespace burnout
