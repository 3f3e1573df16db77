#pragma once

#include <filesystem>
#include <string>

#include "burnout/schedule.hpp"

namespace burnout {

enum class ScheduleFormat { Csv, Json };

/// Pick Csv/Json from a file extension; anything unknown throws.
ScheduleFormat schedule_format_from_path(const std::filesystem::path& path);

/// Config file: JSON document whose keys mirror TournamentConfig.
TournamentConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const TournamentConfig& config);
void save_config(const TournamentConfig& config, const std::filesystem::path& path);

/// Schedule files.
///   CSV : header `date,slot_of_day,home_abbrev,away_abbrev,venue_code`.
///   JSON: { "config": <name>, "games": [ {date, slot_of_day, home, away, venue}, ... ] }.
/// Games are normalized to (date, slot-of-day, venue code) order on load.
/// Unknown codes, bad fields and duplicate (team, slot) assignments throw
/// ParseError with the offending location.
Schedule load_schedule(const std::filesystem::path& path, const TournamentConfig& config,
                       ScheduleFormat format);
Schedule load_schedule(const std::filesystem::path& path, const TournamentConfig& config);

std::string schedule_to_csv(const Schedule& schedule);
std::string schedule_to_json(const Schedule& schedule);
void save_schedule(const Schedule& schedule, const std::filesystem::path& path, ScheduleFormat format);

}  // namespace burnout
