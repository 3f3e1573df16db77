#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burnout/date.hpp"

namespace burnout {

/// One participating side. Ids are dense 0..n-1; abbreviations are the
/// short codes used in schedule files ("IU", "KK", ...).
struct Team {
    int id = -1;
    std::string name;
    std::string abbrev;

    friend bool operator==(const Team&, const Team&) = default;
};

/// A ground. Each venue belongs to exactly one city; travel is counted at
/// city granularity. `code` is the single-letter tag used in fixtures.
struct Venue {
    int id = -1;
    std::string name;
    std::string city;
    std::string code;

    friend bool operator==(const Venue&, const Venue&) = default;
};

/// A schedulable unit: one calendar date plus a slot-of-day index. At most
/// two slots exist per date.
struct Slot {
    Date date;
    int slot_of_day = 0;  // 0 or 1

    auto operator<=>(const Slot&) const = default;
};

/// Tournament-wide static description: participants, grounds, venue
/// ownership, the slot calendar and every constraint parameter.
struct TournamentConfig {
    std::string name;
    std::vector<Team> teams;
    std::vector<Venue> venues;
    int rounds = 1;  // r: times each pair meets

    /// team id -> venue id; absent for no-home-venue teams.
    std::map<int, int> primary_home;
    /// team id -> venue id; must exist for every team without a primary.
    std::map<int, int> secondary_home;

    std::vector<Slot> slot_calendar;
    bool temporally_constrained = false;

    /// Lower/upper bound on consecutive same-status (home/away) games.
    int break_lower = 1;  // Y
    int break_upper = 3;  // Z

    std::set<int> strong_teams;  // S

    /// (designated-home id, away id) -> permitted slot indices. Pairs not
    /// present are unconstrained.
    std::map<std::pair<int, int>, std::set<int>> availability;  // A_{i,j}
    /// team id -> permitted designated-home slot indices. Teams not present
    /// are unconstrained.
    std::map<int, std::set<int>> venue_availability;  // B_i

    /// (home id, away id) -> 1 when the pairing is an attractive game.
    std::map<std::pair<int, int>, int> popularity;  // g_{i,j}
    int popularity_cap = 0;                          // g_max

    /// Start hours for slot-of-day 0 and 1. A lone game on a date sits in
    /// slot 1 (the evening slot).
    int slot_start_hours[2] = {14, 19};

    int team_count() const { return static_cast<int>(teams.size()); }
    int slot_count() const { return static_cast<int>(slot_calendar.size()); }

    const Team* team_by_abbrev(const std::string& abbrev) const;
    const Venue* venue_by_code(const std::string& code) const;

    /// Primary/secondary venue of a team, or nullopt.
    std::optional<int> primary_venue(int team) const;
    std::optional<int> secondary_venue(int team) const;

    /// True when the two teams' home grounds (primary, or secondary for
    /// no-home-venue teams) coincide.
    bool share_home_venue(int team_a, int team_b) const;

    /// Checks every structural invariant (dense unique ids, unique codes,
    /// n >= 2, r >= 1, Y <= Z, strong subset, secondary cover, at most two
    /// slots per date, ordered calendar). Throws ValidationError.
    void validate() const;

    friend bool operator==(const TournamentConfig& a, const TournamentConfig& b);
};

/// One fixture: `home` is the designated home side, which may or may not
/// play at its own ground.
struct Game {
    int home = -1;
    int away = -1;
    int venue = -1;
    int slot = -1;  // index into slot_calendar

    friend bool operator==(const Game&, const Game&) = default;
};

/// Where a designated-home game was actually played, relative to the
/// designated home side:
///   Home          at its primary ground
///   Away          at the opponent's primary ground
///   SecondaryHome at its secondary ground
///   Neutral       anywhere else
enum class Designation { Home, Away, SecondaryHome, Neutral };

char designation_code(Designation d);  // 'H', 'A', 'S', 'N'

/// A full schedule: immutable after construction, games sorted by slot.
struct Schedule {
    TournamentConfig config;
    std::vector<Game> games;

    /// Kick-off of a game (date from the slot calendar, hour from config).
    DateTime game_start(const Game& g) const;

    /// Validates schedule invariants on top of config.validate():
    /// home != away, slots within bounds, no team twice in one slot,
    /// games sorted by (slot, venue code). Throws ValidationError.
    void validate() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Designation of one game for its designated home side. Precedence:
/// opponent's primary beats own primary beats own secondary; anything else
/// is neutral.
Designation classify_designation(const TournamentConfig& config, const Game& game);
Designation classify_designation(const Schedule& schedule, const Game& game);

/// Home/away status of `team` inside a game it takes part in. The
/// designated home side is "home" for designations Home and SecondaryHome;
/// the designated away side is "home" exactly when the game carries an
/// Away designation (it is being played on that side's own ground).
bool counts_as_home(const TournamentConfig& config, const Game& game, int team);

/// n x n matrix of designations indexed (designated home, opponent).
/// Entry is empty on the diagonal and for ordered pairs that never meet.
/// When an ordered pair meets more than once the first game's designation
/// is reported.
using HomeAwayMap = std::vector<std::vector<std::optional<Designation>>>;
HomeAwayMap home_away_map(const Schedule& schedule);

/// Games of one team ordered chronologically (by slot).
std::vector<const Game*> games_of_team(const Schedule& schedule, int team);

}  // namespace burnout
