#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "burnout/schedule.hpp"

namespace burnout {

/// Per-team raw inputs to the six-item weighting criterion, indexed by
/// team id.
struct ScoreInputs {
    std::vector<double> rmse;              // rest-day utilization RMSE, lower is better
    std::vector<double> prior_avg_fatigue; // lower is better
    std::vector<double> avg_peak_fatigue;  // lower is better
    std::vector<int> travel;               // inter-city moves T_i
    std::vector<int> rest_days_net;        // no-game days minus travel days
    std::vector<int> home_points;          // home games (S games for no-home-venue teams)

    /// Throws ValidationError unless every vector covers all n teams with
    /// finite values.
    void validate(int team_count) const;
};

/// How tied values share rank points.
enum class TiePolicy { ShareHigher, ShareLower };

/// Rank-based points: the best value takes n-1, the worst 0, intermediate
/// values their dense-rank position. Tied teams share one block.
std::map<int, int> rank_points(const std::map<int, double>& values, bool lower_is_better,
                               TiePolicy ties = TiePolicy::ShareHigher);

/// Travel points: max travel across teams minus own travel.
std::map<int, int> travel_points(const std::map<int, int>& travel);

struct TeamScore {
    int team = -1;
    std::array<int, 6> items{};  // rmse, prior fatigue, peak fatigue, travel, rest days, home games
    int fatigue_subtotal = 0;    // items 1-5
    int total = 0;               // all six

    friend bool operator==(const TeamScore&, const TeamScore&) = default;
};

struct FairnessScorecard {
    std::vector<TeamScore> teams;      // team id order
    int most_favored_total = -1;       // argmax of total
    int most_favored_fatigue = -1;     // argmax of fatigue subtotal
};

FairnessScorecard score(const ScoreInputs& inputs, int team_count,
                        TiePolicy ties = TiePolicy::ShareHigher);

/// Inputs measured from a schedule: RMSE from rest utilization, fatigue
/// metrics from the superposed timelines, travel/rest/home from the
/// competitive summaries.
ScoreInputs score_inputs_from_schedule(const Schedule& schedule);

/// CSV round-trip (one row per team: items, fatigue subtotal, total).
std::string scorecard_to_csv(const TournamentConfig& config, const FairnessScorecard& card);
std::vector<TeamScore> scorecard_from_csv(const std::string& text);

}  // namespace burnout
