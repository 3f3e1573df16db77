#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burnout/schedule.hpp"

namespace burnout {

/// One fixture to be dated: designated home, away, venue (config ids).
struct GameSpec {
    int home = -1;
    int away = -1;
    int venue = -1;
};

/// Per-team statistics a reconstructed calendar must hit exactly.
struct TeamTargets {
    int no_game_days = 0;                       // span is game count + this
    std::map<std::pair<int, int>, int> streaks; // (X, Y) -> exact count
};

/// Derived metrics a candidate calendar can be filtered on. Values of a
/// team are final as soon as its last game is placed, so violated
/// orderings prune the search early.
enum class MetricKind { RestRmse, PriorAvgFatigue, AvgPeakFatigue, MaxFatigue, PeakSeparation };

/// Requires metric(lesser_team) < metric(greater_team); with strict off,
/// <= (ties allowed).
struct MetricConstraint {
    MetricKind metric;
    int lesser_team = -1;
    int greater_team = -1;
    bool strict = true;
};

/// Requires metric(team) > min_value.
struct MetricFloor {
    MetricKind metric;
    int team = -1;
    double min_value = 0.0;
};

/// Search space and targets for the date reconstruction. The hard
/// constraints are each team's required venue order, the per-day limits and
/// the horizon; the targets and metric constraints select among feasible
/// calendars.
struct CalendarProblem {
    std::vector<GameSpec> games;
    /// Per team: the venue id sequence its games must follow chronologically.
    std::vector<std::vector<int>> venue_order;
    int horizon_days = 0;       // calendar days available, 1-based
    int max_games_per_day = 2;  // league-wide
    std::vector<TeamTargets> targets;  // team id order

    std::vector<MetricConstraint> order_constraints;
    std::vector<MetricFloor> floors;

    /// Optional acceptance predicate evaluated on complete candidate
    /// schedules. The search yields the first candidate, in deterministic
    /// order, that passes everything.
    std::function<bool(const Schedule&)> accept;

    /// Abort with ValidationError after this many day-placements tried
    /// (0 = unlimited).
    long long max_nodes = 0;
};

struct CalendarSolution {
    std::vector<int> day_of_game;   // 1-based day per game, aligned with games
    std::vector<int> slot_of_game;  // 0 (afternoon) or 1 (evening)
    long long candidates_tested = 0;
};

/// Depth-first day-by-day search. Branches over the day's game sets and,
/// for double headers, over which game takes the afternoon slot.
/// Deterministic: candidates are explored in a fixed order, so the first
/// solution is reproducible. Returns nullopt when the target statistics are
/// unsatisfiable within the horizon.
std::optional<CalendarSolution> reconstruct_calendar(const CalendarProblem& problem,
                                                     const TournamentConfig& config);

/// Materializes a dated game list as a Schedule over `config`'s calendar.
/// Days map to dates via the config slot calendar's first date.
Schedule realize_schedule(const CalendarProblem& problem, const std::vector<int>& day_of_game,
                          const std::vector<int>& slot_of_game, const TournamentConfig& config);

}  // namespace burnout
