#include "burnout/fatigue.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "burnout/error.hpp"

namespace burnout {

namespace {

constexpr int kTravelStartHour = 10;

}  // namespace

FatigueCurve event_curve(EventKind kind) {
    FatigueCurve curve;
    curve.kind = kind;
    curve.peak = kind == EventKind::Play ? 1.0 : 0.5;
    // Unit-amplitude shape on x, y in [0,1]; the peak scales the amplitude.
    for (int k = 0; k < FatigueCurve::rise_hours; ++k) {
        const double x = static_cast<double>(k) / (FatigueCurve::rise_hours - 1);
        curve.samples[static_cast<std::size_t>(k)] = curve.peak * std::exp(5.0 * (x - 1.0));
    }
    for (int m = 0; m < FatigueCurve::decay_hours; ++m) {
        const double y = static_cast<double>(m) / (FatigueCurve::decay_hours - 1);
        curve.samples[static_cast<std::size_t>(FatigueCurve::rise_hours + m)] =
            curve.peak * std::exp(-5.0 * y);
    }
    return curve;
}

std::vector<FatigueEvent> team_events(const Schedule& schedule, int team) {
    const TeamItinerary it = itinerary(schedule, team);
    std::vector<FatigueEvent> events;
    for (std::size_t k = 0; k < it.size(); ++k) {
        events.push_back({EventKind::Play, it.starts[k]});
        if (k + 1 < it.size() && it.cities[k] != it.cities[k + 1]) {
            const Date gap_day = it.dates[k] + 1;
            const Date travel_day = gap_day < it.dates[k + 1] ? gap_day : it.dates[k + 1];
            events.push_back({EventKind::Travel, DateTime{travel_day, kTravelStartHour}});
        }
    }
    std::sort(events.begin(), events.end(),
              [](const FatigueEvent& a, const FatigueEvent& b) { return a.start < b.start; });
    return events;
}

FatigueTimeline superpose(const std::vector<FatigueEvent>& events, DateTime t0) {
    FatigueTimeline tl;
    tl.t0 = t0;
    tl.events = events;
    if (events.empty()) return tl;

    std::int64_t last_start = 0;
    for (const FatigueEvent& e : events) {
        last_start = std::max(last_start, e.start.hour_index() - t0.hour_index());
    }
    tl.samples.assign(static_cast<std::size_t>(last_start + FatigueCurve::length), 0.0);

    const FatigueCurve play = event_curve(EventKind::Play);
    const FatigueCurve travel = event_curve(EventKind::Travel);
    for (const FatigueEvent& e : events) {
        const FatigueCurve& curve = e.kind == EventKind::Play ? play : travel;
        const std::int64_t offset = e.start.hour_index() - t0.hour_index();
        for (int h = 0; h < FatigueCurve::length; ++h) {
            const std::int64_t index = offset + h;
            if (index >= 0 && index < static_cast<std::int64_t>(tl.samples.size())) {
                tl.samples[static_cast<std::size_t>(index)] += curve.samples[static_cast<std::size_t>(h)];
            }
        }
    }
    return tl;
}

FatigueTimeline build_timeline(const Schedule& schedule, int team) {
    const std::vector<FatigueEvent> events = team_events(schedule, team);
    if (events.empty()) {
        throw ValidationError("team has no games; fatigue timeline undefined");
    }
    Date first_game_date = schedule.config.slot_calendar.empty()
                               ? events.front().start.date
                               : schedule.game_start(schedule.games.front()).date;
    FatigueTimeline tl = superpose(events, DateTime{first_game_date, 0});
    tl.team = team;
    return tl;
}

double max_fatigue(const FatigueTimeline& tl) {
    double best = 0.0;
    for (double v : tl.samples) best = std::max(best, v);
    return best;
}

double avg_peak_fatigue(const FatigueTimeline& tl) {
    double sum = 0.0;
    int plays = 0;
    for (const FatigueEvent& e : tl.events) {
        if (e.kind != EventKind::Play) continue;
        const std::int64_t peak_hour = tl.hour_of(e.start) + FatigueCurve::peak_offset;
        sum += tl.samples.at(static_cast<std::size_t>(peak_hour));
        ++plays;
    }
    if (plays == 0) throw ValidationError("avg peak fatigue needs at least one play event");
    return sum / plays;
}

double prior_avg_fatigue(const FatigueTimeline& tl) {
    if (tl.events.empty()) throw ValidationError("prior fatigue needs at least one event");
    const FatigueCurve play = event_curve(EventKind::Play);
    const FatigueCurve travel = event_curve(EventKind::Travel);
    double sum = 0.0;
    for (const FatigueEvent& e : tl.events) {
        const std::int64_t start_hour = tl.hour_of(e.start);
        double value = tl.samples.at(static_cast<std::size_t>(start_hour));
        // Residual fatigue only: the starting event's own first sample is
        // excluded from the reading.
        value -= (e.kind == EventKind::Play ? play : travel).samples[0];
        sum += value;
    }
    return sum / static_cast<double>(tl.events.size());
}

double peak_separation_hours(const FatigueTimeline& tl) {
    std::vector<std::int64_t> peaks;
    for (const FatigueEvent& e : tl.events) {
        if (e.kind == EventKind::Play) peaks.push_back(e.start.hour_index() + FatigueCurve::peak_offset);
    }
    if (peaks.size() < 2) throw ValidationError("peak separation needs at least two play events");
    std::sort(peaks.begin(), peaks.end());
    double sum = 0.0;
    for (std::size_t k = 1; k < peaks.size(); ++k) sum += static_cast<double>(peaks[k] - peaks[k - 1]);
    return sum / static_cast<double>(peaks.size() - 1);
}

std::vector<HistogramBin> fatigue_histogram(const FatigueTimeline& tl, int bins) {
    if (bins < 1) throw ValidationError("histogram needs at least one bin");
    const double top = max_fatigue(tl);
    std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
    const double width = top > 0.0 ? top / bins : 1.0;
    for (int b = 0; b < bins; ++b) {
        out[static_cast<std::size_t>(b)].lo = b * width;
        out[static_cast<std::size_t>(b)].hi = (b + 1) * width;
    }
    for (double v : tl.samples) {
        int b = top > 0.0 ? static_cast<int>(v / width) : 0;
        b = std::clamp(b, 0, bins - 1);
        ++out[static_cast<std::size_t>(b)].count;
    }
    return out;
}

std::vector<std::pair<double, double>> fatigue_cdf(const FatigueTimeline& tl) {
    std::vector<double> sorted = tl.samples;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> cdf;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (k + 1 < sorted.size() && sorted[k + 1] == sorted[k]) continue;
        cdf.emplace_back(sorted[k], static_cast<double>(k + 1) / n);
    }
    return cdf;
}

RestUtilization rest_utilization(const TeamItinerary& it) {
    if (it.dates.empty()) throw ValidationError("rest utilization needs a non-empty itinerary");
    RestUtilization u;
    u.team = it.team;
    const int games = static_cast<int>(it.dates.size());
    const RestStats stats = rest_statistics(it);

    for (int k = 0; k < games; ++k) {
        // Rest days strictly between the first game date and game k+1's date.
        int rest = it.dates[static_cast<std::size_t>(k)] - it.dates.front() - k;
        u.per_game_cumulative.push_back(rest);
    }
    for (int k = 0; k < games; ++k) {
        const double frac = games > 1 ? static_cast<double>(k) / (games - 1) : 0.0;
        u.ideal.push_back(frac * stats.no_game_days);
    }
    return u;
}

double rest_rmse(const RestUtilization& u) {
    double sum = 0.0;
    for (std::size_t k = 0; k < u.per_game_cumulative.size(); ++k) {
        const double d = u.per_game_cumulative[k] - u.ideal[k];
        sum += d * d;
    }
    return u.per_game_cumulative.empty() ? 0.0 : std::sqrt(sum / u.per_game_cumulative.size());
}

std::string timeline_to_csv(const FatigueTimeline& tl) {
    std::ostringstream out;
    out << "hour,fatigue\n";
    out.precision(12);
    for (std::size_t h = 0; h < tl.samples.size(); ++h) out << h << ',' << tl.samples[h] << '\n';
    return out.str();
}

std::vector<double> timeline_samples_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "hour,fatigue") throw ParseError("", "bad timeline CSV header");
    std::vector<double> samples;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("", "bad timeline row '" + line + "'");
        samples.push_back(std::stod(line.substr(comma + 1)));
    }
    return samples;
}

std::string histogram_to_csv(const std::vector<HistogramBin>& bins) {
    std::ostringstream out;
    out << "bin_lo,bin_hi,count\n";
    out.precision(12);
    for (const HistogramBin& b : bins) out << b.lo << ',' << b.hi << ',' << b.count << '\n';
    return out.str();
}

std::string cdf_to_csv(const std::vector<std::pair<double, double>>& cdf) {
    std::ostringstream out;
    out << "fatigue,cumulative_fraction\n";
    out.precision(12);
    for (const auto& [value, fraction] : cdf) out << value << ',' << fraction << '\n';
    return out.str();
}

std::string rest_utilization_to_csv(const RestUtilization& u) {
    std::ostringstream out;
    out << "game_index,cumulative_rest_days,ideal\n";
    out.precision(12);
    for (std::size_t k = 0; k < u.per_game_cumulative.size(); ++k) {
        out << (k + 1) << ',' << u.per_game_cumulative[k] << ',' << u.ideal[k] << '\n';
    }
    return out.str();
}

}  // namespace burnout
