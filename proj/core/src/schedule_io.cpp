#include "burnout/schedule_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "burnout/error.hpp"

namespace burnout {

using nlohmann::json;

namespace {

std::string location(const std::filesystem::path& path, int line) {
    return path.string() + ":" + std::to_string(line);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(path.string(), "cannot open file for writing");
    out << text;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

int find_slot(const TournamentConfig& config, Date date, int slot_of_day) {
    for (int i = 0; i < config.slot_count(); ++i) {
        const Slot& s = config.slot_calendar[static_cast<std::size_t>(i)];
        if (s.date == date && s.slot_of_day == slot_of_day) return i;
    }
    return -1;
}

Game make_game(const TournamentConfig& config, const std::string& where, const std::string& date_text,
               const std::string& slot_text, const std::string& home, const std::string& away,
               const std::string& venue) {
    Date date;
    try {
        date = parse_date(date_text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ":date", e.what());
    }
    int slot_of_day = 0;
    try {
        slot_of_day = std::stoi(slot_text);
    } catch (const std::exception&) {
        throw ParseError(where + ":slot_of_day", "expected 0 or 1, got '" + slot_text + "'");
    }
    const Team* h = config.team_by_abbrev(home);
    if (!h) throw ParseError(where + ":home", "unknown team code '" + home + "'");
    const Team* a = config.team_by_abbrev(away);
    if (!a) throw ParseError(where + ":away", "unknown team code '" + away + "'");
    const Venue* v = config.venue_by_code(venue);
    if (!v) throw ParseError(where + ":venue", "unknown venue code '" + venue + "'");
    const int slot = find_slot(config, date, slot_of_day);
    if (slot < 0) {
        throw ParseError(where + ":date", "no calendar slot on " + date_text + " slot " + slot_text);
    }
    return Game{h->id, a->id, v->id, slot};
}

Schedule finalize(const TournamentConfig& config, std::vector<Game> games,
                  const std::filesystem::path& path) {
    std::sort(games.begin(), games.end(), [&config](const Game& a, const Game& b) {
        const Slot& sa = config.slot_calendar[static_cast<std::size_t>(a.slot)];
        const Slot& sb = config.slot_calendar[static_cast<std::size_t>(b.slot)];
        return std::tie(sa.date, sa.slot_of_day, config.venues[static_cast<std::size_t>(a.venue)].code) <
               std::tie(sb.date, sb.slot_of_day, config.venues[static_cast<std::size_t>(b.venue)].code);
    });
    Schedule schedule{config, std::move(games)};
    try {
        schedule.validate();
    } catch (const ValidationError& e) {
        throw ParseError(path.string(), e.what());
    }
    return schedule;
}

json date_map_key(const TournamentConfig& config, int team) {
    return config.teams[static_cast<std::size_t>(team)].abbrev;
}

template <typename T>
T get_field(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw ParseError(where, "missing key '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(where + ":" + key, e.what());
    }
}

}  // namespace

ScheduleFormat schedule_format_from_path(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".csv") return ScheduleFormat::Csv;
    if (ext == ".json") return ScheduleFormat::Json;
    throw ParseError(path.string(), "cannot infer schedule format from extension '" + ext + "'");
}

TournamentConfig load_config(const std::filesystem::path& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path.string(), e.what());
    }
    const std::string where = path.string();
    TournamentConfig config;
    config.name = j.value("name", "");

    for (const json& jt : get_field<json>(j, "teams", where)) {
        Team t;
        t.id = static_cast<int>(config.teams.size());
        t.name = get_field<std::string>(jt, "name", where);
        t.abbrev = get_field<std::string>(jt, "abbrev", where);
        config.teams.push_back(std::move(t));
    }
    for (const json& jv : get_field<json>(j, "venues", where)) {
        Venue v;
        v.id = static_cast<int>(config.venues.size());
        v.name = get_field<std::string>(jv, "name", where);
        v.city = get_field<std::string>(jv, "city", where);
        v.code = get_field<std::string>(jv, "code", where);
        config.venues.push_back(std::move(v));
    }
    config.rounds = j.value("rounds", 1);

    const auto team_ref = [&](const std::string& abbrev) {
        const Team* t = config.team_by_abbrev(abbrev);
        if (!t) throw ParseError(where, "unknown team code '" + abbrev + "'");
        return t->id;
    };
    const auto venue_ref = [&](const std::string& code) {
        const Venue* v = config.venue_by_code(code);
        if (!v) throw ParseError(where, "unknown venue code '" + code + "'");
        return v->id;
    };

    // items() needs an lvalue; materialize the defaulted lookups first.
    const json primary = j.value("primary_home", json::object());
    for (const auto& [abbrev, code] : primary.items()) {
        config.primary_home[team_ref(abbrev)] = venue_ref(code.get<std::string>());
    }
    const json secondary = j.value("secondary_home", json::object());
    for (const auto& [abbrev, code] : secondary.items()) {
        config.secondary_home[team_ref(abbrev)] = venue_ref(code.get<std::string>());
    }

    for (const json& js : get_field<json>(j, "slot_calendar", where)) {
        Slot s;
        s.date = parse_date(get_field<std::string>(js, "date", where));
        s.slot_of_day = get_field<int>(js, "slot_of_day", where);
        config.slot_calendar.push_back(s);
    }

    config.temporally_constrained = j.value("temporally_constrained", false);
    if (j.contains("break_bounds")) {
        config.break_lower = get_field<int>(j["break_bounds"], "lower", where);
        config.break_upper = get_field<int>(j["break_bounds"], "upper", where);
    }
    for (const json& ja : j.value("strong_teams", json::array())) {
        config.strong_teams.insert(team_ref(ja.get<std::string>()));
    }
    for (const json& ja : j.value("availability", json::array())) {
        const int home = team_ref(get_field<std::string>(ja, "home", where));
        const int away = team_ref(get_field<std::string>(ja, "away", where));
        auto& slots = config.availability[{home, away}];
        for (const json& s : get_field<json>(ja, "slots", where)) slots.insert(s.get<int>());
    }
    const json venue_avail = j.value("venue_availability", json::object());
    for (const auto& [abbrev, jslots] : venue_avail.items()) {
        auto& slots = config.venue_availability[team_ref(abbrev)];
        for (const json& s : jslots) slots.insert(s.get<int>());
    }
    for (const json& jp : j.value("popularity", json::array())) {
        const int home = team_ref(get_field<std::string>(jp, "home", where));
        const int away = team_ref(get_field<std::string>(jp, "away", where));
        config.popularity[{home, away}] = get_field<int>(jp, "value", where);
    }
    config.popularity_cap = j.value("popularity_cap", 0);
    if (j.contains("slot_start_hours")) {
        const auto hours = j["slot_start_hours"].get<std::vector<int>>();
        if (hours.size() != 2) throw ParseError(where, "slot_start_hours needs exactly 2 entries");
        config.slot_start_hours[0] = hours[0];
        config.slot_start_hours[1] = hours[1];
    }

    try {
        config.validate();
    } catch (const ValidationError& e) {
        throw ParseError(where, e.what());
    }
    return config;
}

std::string config_to_json(const TournamentConfig& config) {
    json j;
    j["name"] = config.name;
    j["teams"] = json::array();
    for (const Team& t : config.teams) j["teams"].push_back({{"name", t.name}, {"abbrev", t.abbrev}});
    j["venues"] = json::array();
    for (const Venue& v : config.venues) {
        j["venues"].push_back({{"name", v.name}, {"city", v.city}, {"code", v.code}});
    }
    j["rounds"] = config.rounds;
    j["primary_home"] = json::object();
    for (const auto& [t, v] : config.primary_home) {
        j["primary_home"][config.teams[static_cast<std::size_t>(t)].abbrev] =
            config.venues[static_cast<std::size_t>(v)].code;
    }
    j["secondary_home"] = json::object();
    for (const auto& [t, v] : config.secondary_home) {
        j["secondary_home"][config.teams[static_cast<std::size_t>(t)].abbrev] =
            config.venues[static_cast<std::size_t>(v)].code;
    }
    j["slot_calendar"] = json::array();
    for (const Slot& s : config.slot_calendar) {
        j["slot_calendar"].push_back({{"date", format_date(s.date)}, {"slot_of_day", s.slot_of_day}});
    }
    j["temporally_constrained"] = config.temporally_constrained;
    j["break_bounds"] = {{"lower", config.break_lower}, {"upper", config.break_upper}};
    j["strong_teams"] = json::array();
    for (int t : config.strong_teams) j["strong_teams"].push_back(date_map_key(config, t));
    j["availability"] = json::array();
    for (const auto& [pair, slots] : config.availability) {
        j["availability"].push_back({{"home", date_map_key(config, pair.first)},
                                     {"away", date_map_key(config, pair.second)},
                                     {"slots", slots}});
    }
    j["venue_availability"] = json::object();
    for (const auto& [t, slots] : config.venue_availability) {
        j["venue_availability"][date_map_key(config, t)] = slots;
    }
    j["popularity"] = json::array();
    for (const auto& [pair, value] : config.popularity) {
        j["popularity"].push_back({{"home", date_map_key(config, pair.first)},
                                   {"away", date_map_key(config, pair.second)},
                                   {"value", value}});
    }
    j["popularity_cap"] = config.popularity_cap;
    j["slot_start_hours"] = {config.slot_start_hours[0], config.slot_start_hours[1]};
    return j.dump(2) + "\n";
}

void save_config(const TournamentConfig& config, const std::filesystem::path& path) {
    write_file(path, config_to_json(config));
}

Schedule load_schedule(const std::filesystem::path& path, const TournamentConfig& config,
                       ScheduleFormat format) {
    config.validate();
    std::vector<Game> games;
    if (format == ScheduleFormat::Csv) {
        std::istringstream in(read_file(path));
        std::string line;
        int lineno = 0;
        bool saw_header = false;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line == "\r") continue;
            const auto fields = split_csv_line(line);
            if (!saw_header) {
                if (fields != std::vector<std::string>{"date", "slot_of_day", "home_abbrev",
                                                       "away_abbrev", "venue_code"}) {
                    throw ParseError(location(path, lineno),
                                     "expected header date,slot_of_day,home_abbrev,away_abbrev,venue_code");
                }
                saw_header = true;
                continue;
            }
            if (fields.size() != 5) {
                throw ParseError(location(path, lineno),
                                 "expected 5 fields, got " + std::to_string(fields.size()));
            }
            games.push_back(make_game(config, location(path, lineno), fields[0], fields[1], fields[2],
                                      fields[3], fields[4]));
        }
        if (!saw_header) throw ParseError(path.string(), "empty schedule file (missing header)");
    } else {
        json j;
        try {
            j = json::parse(read_file(path));
        } catch (const json::parse_error& e) {
            throw ParseError(path.string(), e.what());
        }
        const std::string where = path.string();
        if (j.contains("config") && !config.name.empty()) {
            const std::string ref = j["config"].get<std::string>();
            if (ref != config.name) {
                throw ParseError(where, "schedule references config '" + ref + "' but '" + config.name +
                                            "' was loaded");
            }
        }
        int index = 0;
        for (const json& jg : get_field<json>(j, "games", where)) {
            const std::string game_where = where + ":games[" + std::to_string(index++) + "]";
            games.push_back(make_game(config, game_where, get_field<std::string>(jg, "date", game_where),
                                      std::to_string(get_field<int>(jg, "slot_of_day", game_where)),
                                      get_field<std::string>(jg, "home", game_where),
                                      get_field<std::string>(jg, "away", game_where),
                                      get_field<std::string>(jg, "venue", game_where)));
        }
    }
    return finalize(config, std::move(games), path);
}

Schedule load_schedule(const std::filesystem::path& path, const TournamentConfig& config) {
    return load_schedule(path, config, schedule_format_from_path(path));
}

std::string schedule_to_csv(const Schedule& schedule) {
    std::ostringstream out;
    out << "date,slot_of_day,home_abbrev,away_abbrev,venue_code\n";
    for (const Game& g : schedule.games) {
        const Slot& s = schedule.config.slot_calendar[static_cast<std::size_t>(g.slot)];
        out << format_date(s.date) << ',' << s.slot_of_day << ','
            << schedule.config.teams[static_cast<std::size_t>(g.home)].abbrev << ','
            << schedule.config.teams[static_cast<std::size_t>(g.away)].abbrev << ','
            << schedule.config.venues[static_cast<std::size_t>(g.venue)].code << '\n';
    }
    return out.str();
}

std::string schedule_to_json(const Schedule& schedule) {
    json j;
    j["config"] = schedule.config.name;
    j["games"] = json::array();
    for (const Game& g : schedule.games) {
        const Slot& s = schedule.config.slot_calendar[static_cast<std::size_t>(g.slot)];
        j["games"].push_back({{"date", format_date(s.date)},
                              {"slot_of_day", s.slot_of_day},
                              {"home", schedule.config.teams[static_cast<std::size_t>(g.home)].abbrev},
                              {"away", schedule.config.teams[static_cast<std::size_t>(g.away)].abbrev},
                              {"venue", schedule.config.venues[static_cast<std::size_t>(g.venue)].code}});
    }
    return j.dump(2) + "\n";
}

void save_schedule(const Schedule& schedule, const std::filesystem::path& path, ScheduleFormat format) {
    write_file(path, format == ScheduleFormat::Csv ? schedule_to_csv(schedule) : schedule_to_json(schedule));
}

}  // namespace burnout
