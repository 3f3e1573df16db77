#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "burnout/schedule.hpp"

namespace burnout {

/// Chronological trace of one team's games: venue, city and kick-off per
/// game, in playing order.
struct TeamItinerary {
    int team = -1;
    std::vector<int> venues;
    std::vector<std::string> cities;
    std::vector<Date> dates;
    std::vector<DateTime> starts;

    std::size_t size() const { return venues.size(); }

    friend bool operator==(const TeamItinerary&, const TeamItinerary&) = default;
};

struct RestStats {
    int span_days = 0;       // first to last game, inclusive
    int no_game_days = 0;    // span minus distinct playing dates
    double avg_games_per_day = 0.0;
};

/// How overlapping qualifying windows are counted.
///   Greedy     earliest-first scan; a window whose games are already
///              covered by an earlier counted window is skipped.
///   AllWindows every qualifying start day counts.
enum class StreakMode { Greedy, AllWindows };

/// Per-team roll-up of every competitive parameter.
struct CompetitiveSummary {
    int team = -1;
    int total_travel = 0;
    int home_games = 0;            // games at the team's primary venue, either role
    int secondary_home_games = 0;  // designated-home games classified S
    int span_days = 0;
    int no_game_days = 0;
    int rest_days_net = 0;  // no_game_days - total_travel
    double avg_games_per_day = 0.0;
    std::map<std::pair<int, int>, int> streaks;  // (X, Y) -> count

    friend bool operator==(const CompetitiveSummary&, const CompetitiveSummary&) = default;
};

/// All games involving `team`, chronological. Throws ValidationError for an
/// unknown team id; a team with no games yields an empty itinerary.
TeamItinerary itinerary(const Schedule& schedule, int team);

/// Number of adjacent itinerary positions whose cities differ.
int travel_count(const TeamItinerary& it);

/// (games at own primary venue in either role, designated-home games played
/// at the secondary venue). A team without a primary venue scores 0 on the
/// first component.
std::pair<int, int> home_game_count(const Schedule& schedule, int team);

/// Throws ValidationError on an empty itinerary.
RestStats rest_statistics(const TeamItinerary& it);

/// Occurrences of >= `games` games inside a window of `window_days`
/// consecutive calendar days. Windows slide one day at a time from the
/// first game date; in Greedy mode a window whose game set is contained in
/// an already-counted window is skipped.
int streak_count(const TeamItinerary& it, int games, int window_days,
                 StreakMode mode = StreakMode::Greedy);

/// Streak patterns reported by default: 2in2, 3in4, 4in6, 6in11.
const std::vector<std::pair<int, int>>& default_streak_patterns();

/// One summary per team (team id order). `extra_patterns` are counted on
/// top of the default four. Throws ValidationError when a team has no
/// games (span statistics are undefined).
std::vector<CompetitiveSummary> summarize(const Schedule& schedule,
                                          const std::vector<std::pair<int, int>>& extra_patterns = {},
                                          StreakMode mode = StreakMode::Greedy);

/// CSV round-trip for summaries: one row per team, venue sequence joined
/// with ';'.
std::string summaries_to_csv(const Schedule& schedule, const std::vector<CompetitiveSummary>& rows);
std::vector<CompetitiveSummary> summaries_from_csv(const std::string& text);

}  // namespace burnout
