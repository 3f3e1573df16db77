// Brute-force date reconstruction: given a fixture list, each team's
// required venue order, and per-team rest/streak targets, finds the first
// calendar (deterministic order) realizing all of them within the horizon,
// then writes the dated fixture as a schedule CSV.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "burnout/calendar_search.hpp"
#include "burnout/error.hpp"
#include "burnout/fatigue.hpp"
#include "burnout/metrics.hpp"
#include "burnout/schedule_io.hpp"

using nlohmann::json;

namespace {

std::pair<int, int> parse_pattern(const std::string& text) {
    const auto sep = text.find("in");
    if (sep == std::string::npos) throw burnout::ParseError("", "bad streak pattern '" + text + "'");
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
}

int team_ref(const burnout::TournamentConfig& config, const std::string& abbrev) {
    const burnout::Team* t = config.team_by_abbrev(abbrev);
    if (!t) throw burnout::ParseError("", "unknown team '" + abbrev + "'");
    return t->id;
}

int venue_ref(const burnout::TournamentConfig& config, const std::string& code) {
    const burnout::Venue* v = config.venue_by_code(code);
    if (!v) throw burnout::ParseError("", "unknown venue '" + code + "'");
    return v->id;
}

/// Expand a strict total order (list of abbrevs, best first) into adjacent
/// pairwise constraints.
void add_chain(burnout::CalendarProblem& problem, const burnout::TournamentConfig& config,
               burnout::MetricKind metric, const json& order) {
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        problem.order_constraints.push_back({metric, team_ref(config, order[k].get<std::string>()),
                                             team_ref(config, order[k + 1].get<std::string>())});
    }
}

/// One team below (or above) every other.
void add_extreme(burnout::CalendarProblem& problem, const burnout::TournamentConfig& config,
                 burnout::MetricKind metric, int team, bool is_min, bool strict = true) {
    for (const burnout::Team& other : config.teams) {
        if (other.id == team) continue;
        if (is_min) {
            problem.order_constraints.push_back({metric, team, other.id, strict});
        } else {
            problem.order_constraints.push_back({metric, other.id, team, strict});
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reconstruct-calendar: date search for round-robin fixtures"};
    std::string config_path;
    std::string targets_path;
    std::string out_path;
    std::string orderings = "full";
    long long max_nodes = 0;
    bool survey = false;
    app.add_option("--config", config_path, "tournament config JSON")->required();
    app.add_option("--targets", targets_path, "reconstruction targets JSON")->required();
    app.add_option("--out", out_path, "output schedule CSV path");
    app.add_option("--orderings", orderings, "metric orderings to enforce: full, acceptance, off")
        ->check(CLI::IsMember({"full", "acceptance", "off"}));
    app.add_option("--max-nodes", max_nodes, "abort after this many search nodes (0 = unlimited)");
    app.add_flag("--survey", survey,
                 "enumerate every calendar hitting the targets and tally the metric orderings");
    CLI11_PARSE(app, argc, argv);

    try {
        const burnout::TournamentConfig config = burnout::load_config(config_path);

        std::ifstream in(targets_path);
        if (!in) throw burnout::ParseError(targets_path, "cannot open file");
        json j = json::parse(in);

        burnout::CalendarProblem problem;
        problem.horizon_days = j.at("horizon_days").get<int>();
        problem.max_games_per_day = j.value("max_games_per_day", 2);
        problem.max_nodes = max_nodes;

        for (const json& jg : j.at("games")) {
            problem.games.push_back({team_ref(config, jg.at("home").get<std::string>()),
                                     team_ref(config, jg.at("away").get<std::string>()),
                                     venue_ref(config, jg.at("venue").get<std::string>())});
        }
        problem.venue_order.resize(static_cast<std::size_t>(config.team_count()));
        for (const auto& [abbrev, codes] : j.at("venue_order").items()) {
            auto& order = problem.venue_order[static_cast<std::size_t>(team_ref(config, abbrev))];
            for (const json& code : codes) order.push_back(venue_ref(config, code.get<std::string>()));
        }
        problem.targets.resize(static_cast<std::size_t>(config.team_count()));
        for (const auto& [abbrev, jt] : j.at("targets").items()) {
            auto& target = problem.targets[static_cast<std::size_t>(team_ref(config, abbrev))];
            target.no_game_days = jt.at("no_game_days").get<int>();
            for (const auto& [pattern, count] : jt.at("streaks").items()) {
                target.streaks[parse_pattern(pattern)] = count.get<int>();
            }
        }

        if (orderings != "off" && j.contains("orderings")) {
            const json& jo = j["orderings"];
            const bool full = orderings == "full";
            if (full) {
                add_chain(problem, config, burnout::MetricKind::RestRmse, jo.at("rest_rmse"));
                add_chain(problem, config, burnout::MetricKind::PriorAvgFatigue,
                          jo.at("prior_avg_fatigue"));
                add_chain(problem, config, burnout::MetricKind::AvgPeakFatigue,
                          jo.at("avg_peak_fatigue"));
            } else {
                // Acceptance-level partial orders: extremes plus the RMSE
                // band KK < PZ < {QG, LQ, MS} < IU derived from the lists.
                const json& rmse = jo.at("rest_rmse");
                const int first = team_ref(config, rmse[0].get<std::string>());
                const int second = team_ref(config, rmse[1].get<std::string>());
                const int last = team_ref(config, rmse[rmse.size() - 1].get<std::string>());
                problem.order_constraints.push_back({burnout::MetricKind::RestRmse, first, second});
                for (std::size_t k = 2; k + 1 < rmse.size(); ++k) {
                    const int mid = team_ref(config, rmse[k].get<std::string>());
                    problem.order_constraints.push_back({burnout::MetricKind::RestRmse, second, mid});
                    problem.order_constraints.push_back({burnout::MetricKind::RestRmse, mid, last});
                }
                add_extreme(problem, config, burnout::MetricKind::PriorAvgFatigue,
                            team_ref(config, jo.at("prior_avg_fatigue")[0].get<std::string>()), true);
                add_extreme(problem, config, burnout::MetricKind::PriorAvgFatigue,
                            team_ref(config, jo.at("prior_avg_fatigue")[config.team_count() - 1]
                                                 .get<std::string>()),
                            false);
                // Weak minimality: teams without any overlapping events tie
                // at a peak of exactly 1.0, so the most favored side is only
                // required to sit in the argmin.
                add_extreme(problem, config, burnout::MetricKind::AvgPeakFatigue,
                            team_ref(config, jo.at("avg_peak_fatigue")[0].get<std::string>()), true,
                            /*strict=*/false);
            }
            add_extreme(problem, config, burnout::MetricKind::PeakSeparation,
                        team_ref(config, jo.at("peak_separation_min").get<std::string>()), true);
            add_extreme(problem, config, burnout::MetricKind::PeakSeparation,
                        team_ref(config, jo.at("peak_separation_max").get<std::string>()), false);
            const int top = team_ref(config, jo.at("max_fatigue_top").get<std::string>());
            add_extreme(problem, config, burnout::MetricKind::MaxFatigue, top, false);
            problem.floors.push_back(
                {burnout::MetricKind::MaxFatigue, top, jo.value("max_fatigue_floor", 1.0)});
        }

        if (survey) {
            long long total = 0;
            std::map<std::string, long long> tallies;
            std::map<std::string, long long> combo_tallies;
            auto constraints = std::move(problem.order_constraints);
            auto floors = std::move(problem.floors);
            problem.order_constraints.clear();
            problem.floors.clear();
            problem.accept = [&](const burnout::Schedule& s) {
                ++total;
                std::map<burnout::MetricKind, std::vector<double>> metric;
                for (const burnout::Team& team : config.teams) {
                    const auto it = burnout::itinerary(s, team.id);
                    const auto tl = burnout::build_timeline(s, team.id);
                    metric[burnout::MetricKind::RestRmse].push_back(
                        burnout::rest_rmse(burnout::rest_utilization(it)));
                    metric[burnout::MetricKind::PriorAvgFatigue].push_back(
                        burnout::prior_avg_fatigue(tl));
                    metric[burnout::MetricKind::AvgPeakFatigue].push_back(
                        burnout::avg_peak_fatigue(tl));
                    metric[burnout::MetricKind::MaxFatigue].push_back(burnout::max_fatigue(tl));
                    metric[burnout::MetricKind::PeakSeparation].push_back(
                        burnout::peak_separation_hours(tl));
                }
                const auto kind_name = [](burnout::MetricKind k) {
                    switch (k) {
                        case burnout::MetricKind::RestRmse: return "rest_rmse";
                        case burnout::MetricKind::PriorAvgFatigue: return "prior_avg_fatigue";
                        case burnout::MetricKind::AvgPeakFatigue: return "avg_peak_fatigue";
                        case burnout::MetricKind::MaxFatigue: return "max_fatigue";
                        case burnout::MetricKind::PeakSeparation: return "peak_separation";
                    }
                    return "?";
                };
                std::map<std::string, bool> family_ok;
                for (const auto& c : constraints) {
                    const bool ok = metric[c.metric][static_cast<std::size_t>(c.lesser_team)] <
                                    metric[c.metric][static_cast<std::size_t>(c.greater_team)];
                    auto [it2, inserted] = family_ok.try_emplace(kind_name(c.metric), ok);
                    if (!inserted) it2->second = it2->second && ok;
                }
                for (const auto& f : floors) {
                    const bool ok = metric[f.metric][static_cast<std::size_t>(f.team)] > f.min_value;
                    auto [it2, inserted] = family_ok.try_emplace(std::string(kind_name(f.metric)) + "_floor", ok);
                    if (!inserted) it2->second = it2->second && ok;
                }
                bool all = true;
                std::string mask;
                for (const auto& [name, ok] : family_ok) {
                    if (ok) ++tallies[name];
                    all = all && ok;
                    mask += ok ? '1' : '0';
                }
                if (all) ++tallies["ALL"];
                if (++combo_tallies[mask] <= 2 && (mask == "011111" || mask == "111110")) {
                    std::cout << "sample " << mask << ":\n";
                    for (const burnout::Team& team : config.teams) {
                        std::cout << "  " << team.abbrev;
                        for (const auto& [kind, values] : metric) {
                            std::cout << ' ' << values[static_cast<std::size_t>(team.id)];
                        }
                        std::cout << '\n';
                    }
                }
                return false;  // keep enumerating
            };
            burnout::reconstruct_calendar(problem, config);
            std::cout << "calendars hitting the targets: " << total << '\n';
            for (const auto& [name, count] : tallies) {
                std::cout << "  " << name << ": " << count << '\n';
            }
            std::cout << "joint satisfaction (avg_peak, max, max_floor, peak_sep, prior, rmse):\n";
            for (const auto& [mask, count] : combo_tallies) {
                std::cout << "  " << mask << ": " << count << '\n';
            }
            return 0;
        }

        const auto solution = burnout::reconstruct_calendar(problem, config);
        if (!solution) {
            std::cerr << "no calendar satisfies the targets within the horizon\n";
            return 2;
        }
        const burnout::Schedule schedule =
            burnout::realize_schedule(problem, solution->day_of_game, solution->slot_of_game, config);

        std::cout << "calendar found after " << solution->candidates_tested << " day placements\n";
        for (const burnout::CompetitiveSummary& row : burnout::summarize(schedule)) {
            std::cout << config.teams[static_cast<std::size_t>(row.team)].abbrev << ": span "
                      << row.span_days << ", no-game " << row.no_game_days << ", travel "
                      << row.total_travel << ", streaks";
            for (const auto& [p, c] : row.streaks) std::cout << ' ' << p.first << "in" << p.second << '=' << c;
            std::cout << '\n';
        }
        if (!out_path.empty()) {
            burnout::save_schedule(schedule, out_path, burnout::ScheduleFormat::Csv);
            std::cout << "wrote " << out_path << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
