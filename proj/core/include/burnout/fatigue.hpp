#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "burnout/metrics.hpp"
#include "burnout/schedule.hpp"

namespace burnout {

enum class EventKind { Play, Travel };

/// 30-hour fatigue response of a single event, sampled hourly: a 7-point
/// exponential rise to the peak followed by a 23-point exponential decay.
/// Play peaks at 1.0, travel at 0.5; the travel curve is the play curve
/// halved at every sample.
struct FatigueCurve {
    EventKind kind = EventKind::Play;
    double peak = 1.0;
    std::array<double, 30> samples{};

    static constexpr int rise_hours = 7;
    static constexpr int decay_hours = 23;
    static constexpr int length = rise_hours + decay_hours;
    /// Offset of the (first) peak sample from the event start.
    static constexpr int peak_offset = rise_hours - 1;
};

FatigueCurve event_curve(EventKind kind);

struct FatigueEvent {
    EventKind kind = EventKind::Play;
    DateTime start;

    friend bool operator==(const FatigueEvent&, const FatigueEvent&) = default;
};

/// Per-team hourly fatigue over the tournament: the additive superposition
/// of one curve per event. `t0` is midnight of the tournament's first game
/// date, shared by all teams so timelines line up; samples run to 30 hours
/// past the team's last event.
struct FatigueTimeline {
    int team = -1;
    DateTime t0;
    std::vector<double> samples;
    std::vector<FatigueEvent> events;

    std::int64_t hour_of(const DateTime& dt) const { return dt.hour_index() - t0.hour_index(); }
};

/// Events of a team: one Play per game plus one Travel per inter-city move.
/// Travel starts at 10:00 on the first non-playing day between the two
/// games, or on the morning of the next game day when they are
/// back-to-back.
std::vector<FatigueEvent> team_events(const Schedule& schedule, int team);

/// Builds the superposed timeline. Throws ValidationError when the team has
/// no games.
FatigueTimeline build_timeline(const Schedule& schedule, int team);

/// Timeline from an explicit event list (the superposition itself, exposed
/// for synthetic inputs).
FatigueTimeline superpose(const std::vector<FatigueEvent>& events, DateTime t0);

double max_fatigue(const FatigueTimeline& tl);

/// Mean timeline value at each play event's peak hour (start + 6 h).
/// Throws ValidationError without play events.
double avg_peak_fatigue(const FatigueTimeline& tl);

/// Mean residual fatigue at each event's start hour, the starting event's
/// own contribution excluded. Throws ValidationError without events.
double prior_avg_fatigue(const FatigueTimeline& tl);

/// Mean hour gap between consecutive play-event peaks. Throws
/// ValidationError with fewer than 2 play events.
double peak_separation_hours(const FatigueTimeline& tl);

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

/// Equal-width bins over [0, max sample]. Bin counts sum to the sample
/// count; the top bin is closed.
std::vector<HistogramBin> fatigue_histogram(const FatigueTimeline& tl, int bins);

/// Empirical CDF of the hourly samples as (value, cumulative fraction)
/// steps; non-decreasing, ending at 1.
std::vector<std::pair<double, double>> fatigue_cdf(const FatigueTimeline& tl);

/// Cumulative rest-day usage per game index against the straight line from
/// 0 at the first game to the team's total rest days at the last.
struct RestUtilization {
    int team = -1;
    std::vector<int> per_game_cumulative;
    std::vector<double> ideal;
};

RestUtilization rest_utilization(const TeamItinerary& it);

/// sqrt(mean((actual - ideal)^2)) over game indices.
double rest_rmse(const RestUtilization& u);

/// CSV exports (hour offsets relative to the timeline's t0).
std::string timeline_to_csv(const FatigueTimeline& tl);
std::vector<double> timeline_samples_from_csv(const std::string& text);
std::string histogram_to_csv(const std::vector<HistogramBin>& bins);
std::string cdf_to_csv(const std::vector<std::pair<double, double>>& cdf);
std::string rest_utilization_to_csv(const RestUtilization& u);

}  // namespace burnout
