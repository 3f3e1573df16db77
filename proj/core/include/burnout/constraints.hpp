#pragma once

#include <set>
#include <string>
#include <vector>

#include "burnout/schedule.hpp"

namespace burnout {

enum class ConstraintId {
    SingleRoundRobin,
    MultiRoundRobin,
    VenueBalance,
    OneGamePerSlot,
    ConsecutiveHome,
    ConsecutiveAway,
    BreakSlotSecond,
    BreakSlotLast,
    StrongTeam,
    Complementary,
    PopularityCap,
    PlayerAvailability,
    Place,
};

const std::vector<ConstraintId>& all_constraints();
std::string constraint_name(ConstraintId id);
/// Parses the snake_case name used by the CLI ("srr", "consec_home", ...).
ConstraintId constraint_from_name(const std::string& name);

/// One broken bound: which constraint, who, where, and how far off.
struct Violation {
    ConstraintId constraint;
    std::vector<int> teams;
    std::vector<int> slots;
    std::string detail;
    long measured = 0;
    long bound = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ViolationReport {
    std::vector<Violation> violations;
    std::set<ConstraintId> checked;

    bool passed() const { return violations.empty(); }
};

/// x[i][j][f]: designated-home i hosts j in slot f.
class IncidenceTensor {
public:
    IncidenceTensor(int teams, int slots);

    int teams() const { return teams_; }
    int slots() const { return slots_; }
    bool at(int home, int away, int slot) const { return bits_[index(home, away, slot)] != 0; }
    void set(int home, int away, int slot, bool value) { bits_[index(home, away, slot)] = value; }

    /// Times i hosts j across all slots.
    int hosting_count(int home, int away) const;
    /// Times the unordered pair meets.
    int meeting_count(int a, int b) const;
    /// Games of a team (either role) ordered by slot, as (slot, opponent,
    /// was_designated_home).
    struct TeamGame {
        int slot;
        int opponent;
        bool designated_home;
    };
    std::vector<TeamGame> team_games(int team) const;

    long long total() const;

private:
    std::size_t index(int home, int away, int slot) const;
    int teams_;
    int slots_;
    std::vector<unsigned char> bits_;
};

IncidenceTensor build_incidence(const Schedule& schedule);

/// Each unordered pair meets exactly once.
std::vector<Violation> check_single_rr(const IncidenceTensor& x);
/// Each unordered pair meets exactly `rounds` times; rounds >= 1.
std::vector<Violation> check_multi_rr(const IncidenceTensor& x, int rounds);
/// Each ordered pair (i, j): i hosts j at least floor(rounds / 2) times.
std::vector<Violation> check_venue_balance(const IncidenceTensor& x, int rounds);
/// Per (team, slot): exactly one game when temporally constrained, at most
/// one otherwise.
std::vector<Violation> check_one_game_per_slot(const IncidenceTensor& x, bool temporally_constrained);

/// Maximal same-status runs (home/away per counts_as_home) must have length
/// in [lower, upper].
std::vector<Violation> check_consecutive_bounds(const Schedule& schedule, int lower, int upper);
/// No break across a team's games (1,2) nor (last-1, last).
std::vector<Violation> check_break_slots(const Schedule& schedule);
/// No two consecutive games of a team against members of `strong`.
std::vector<Violation> check_strong_team(const Schedule& schedule, const std::set<int>& strong);
/// Venue-sharing teams must not both be designated home in one slot.
std::vector<Violation> check_complementary(const Schedule& schedule);
/// Per slot: sum of popularity over scheduled games stays within the cap.
std::vector<Violation> check_popularity_cap(const Schedule& schedule,
                                            const std::map<std::pair<int, int>, int>& popularity,
                                            int popularity_cap);
/// Ordered pairs with an availability set must sit inside it.
std::vector<Violation> check_player_availability(
    const Schedule& schedule, const std::map<std::pair<int, int>, std::set<int>>& availability);
/// Designated-home games of a constrained team must sit inside its venue
/// availability set.
std::vector<Violation> check_place(const Schedule& schedule,
                                   const std::map<int, std::set<int>>& venue_availability);

/// Runs the selected checkers with parameters taken from the schedule's
/// config. Violations come back ordered by (constraint, first slot, first
/// team). Throws ValidationError on an empty selection.
ViolationReport validate_all(const Schedule& schedule, const std::set<ConstraintId>& selection);

std::string report_to_json(const Schedule& schedule, const ViolationReport& report);
std::string report_to_text(const Schedule& schedule, const ViolationReport& report);

}  // namespace burnout
