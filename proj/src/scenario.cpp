#include "leoprop/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "leoprop/astro.hpp"

namespace leoprop {

Keplerian Scenario::initial_elements() const {
    Keplerian el;
    el.a = elements.a_km;
    el.e = elements.e;
    el.inc = deg2rad(elements.inc_deg);
    el.raan = deg2rad(elements.raan_deg);
    el.argp = deg2rad(elements.argp_deg);
    el.M = deg2rad(elements.mean_anomaly_deg);
    return el;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value, int line_no) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("scenario line " + std::to_string(line_no) + ": value of '" +
                                 key + "' is not a number: '" + value + "'");
    }
    if (pos != value.size()) {
        throw std::runtime_error("scenario line " + std::to_string(line_no) +
                                 ": trailing characters in value of '" + key + "'");
    }
    return v;
}

void validate(const Scenario& sc) {
    if (!(sc.elements.a_km > 0.0)) {
        throw std::runtime_error("scenario: field 'a_km' must be positive");
    }
    if (!(sc.elements.e >= 0.0 && sc.elements.e < 1.0)) {
        throw std::runtime_error("scenario: field 'e' must be in [0, 1)");
    }
    if (!(sc.elements.inc_deg >= 0.0 && sc.elements.inc_deg <= 180.0)) {
        throw std::runtime_error("scenario: field 'inc_deg' must be in [0, 180]");
    }
    if (!(sc.duration_s > 0.0)) {
        throw std::runtime_error("scenario: field 'duration_s' must be positive");
    }
    if (!(sc.output_interval_s > 0.0)) {
        throw std::runtime_error("scenario: field 'output_interval_s' must be positive");
    }
    if (!(sc.geo.mu > 0.0) || !(sc.geo.re > 0.0)) {
        throw std::runtime_error("scenario: gravity model requires mu > 0 and re > 0");
    }
}

} // namespace

Scenario load_scenario(const std::string& text) {
    Scenario sc;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("scenario line " + std::to_string(line_no) +
                                     ": expected 'key = value', got '" + trim(raw) + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::runtime_error("scenario line " + std::to_string(line_no) +
                                     ": empty key or value");
        }
        if (!seen.insert(key).second) {
            throw std::runtime_error("scenario line " + std::to_string(line_no) +
                                     ": duplicate key '" + key + "'");
        }

        if (key == "format") {
            if (value != "1") {
                throw std::runtime_error("scenario line " + std::to_string(line_no) +
                                         ": unsupported format '" + value + "' (expected 1)");
            }
        } else if (key == "name") {
            sc.name = value;
        } else if (key == "a_km") {
            sc.elements.a_km = parse_double(key, value, line_no);
        } else if (key == "e") {
            sc.elements.e = parse_double(key, value, line_no);
        } else if (key == "inc_deg") {
            sc.elements.inc_deg = parse_double(key, value, line_no);
        } else if (key == "raan_deg") {
            sc.elements.raan_deg = parse_double(key, value, line_no);
        } else if (key == "argp_deg") {
            sc.elements.argp_deg = parse_double(key, value, line_no);
        } else if (key == "mean_anomaly_deg") {
            sc.elements.mean_anomaly_deg = parse_double(key, value, line_no);
        } else if (key == "duration_s") {
            sc.duration_s = parse_double(key, value, line_no);
        } else if (key == "output_interval_s") {
            sc.output_interval_s = parse_double(key, value, line_no);
        } else if (key == "mu_km3s2") {
            sc.geo.mu = parse_double(key, value, line_no);
        } else if (key == "re_km") {
            sc.geo.re = parse_double(key, value, line_no);
        } else if (key == "j2") {
            sc.geo.j2 = parse_double(key, value, line_no);
        } else if (key == "j3") {
            sc.geo.j3 = parse_double(key, value, line_no);
        } else if (key == "j4") {
            sc.geo.j4 = parse_double(key, value, line_no);
        } else {
            throw std::runtime_error("scenario line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        }
    }

    if (!seen.count("format")) {
        throw std::runtime_error("scenario: missing required field 'format'");
    }
    for (const char* req : {"name", "a_km", "e", "inc_deg", "raan_deg", "argp_deg",
                            "mean_anomaly_deg"}) {
        if (!seen.count(req)) {
            throw std::runtime_error(std::string("scenario: missing required field '") + req +
                                     "'");
        }
    }
    validate(sc);
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

namespace {

// Test-case catalogue (angles in degrees, kept digit-for-digit).
const std::map<std::string, ElementsDeg>& catalogue() {
    static const std::map<std::string, ElementsDeg> table = {
        {"spot4", {7081.1390, 0.0158, 98.0, 164.02, 0.0, 0.0}},
        {"leo-typical", {6831.5723, 0.00136, 51.6, 224.8, 280.1, 66.5}},
        {"eyesat", {7078.0, 0.00001, 98.18, 0.0, 0.0, 0.0}},
        {"proba2", {7106.1370, 0.00004, 98.3, 91.364, -1.423, 180.0}},
        {"jason1", {7254.0729, 0.06216, 66.974, -74.818, -241.050, 179.726}},
        {"cryosat", {7100.4651, 0.00252, 92.029, -37.185, 107.492, 51.202}},
        {"atv", {6586.1775, 0.0328, 51.6, 153.480, -21.395, 215.240}},
        {"labs-dove", {6851.946, 0.0012, 97.326, 0.0, 90.0, 0.0}},
    };
    return table;
}

} // namespace

const std::vector<std::string>& builtin_scenario_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, _] : catalogue()) v.push_back(name);
        return v;
    }();
    return names;
}

Scenario builtin_scenario(const std::string& name) {
    const auto it = catalogue().find(name);
    if (it == catalogue().end()) {
        throw std::runtime_error("unknown built-in scenario '" + name + "'");
    }
    Scenario sc;
    sc.name = it->first;
    sc.elements = it->second;
    return sc;
}

Scenario resolve_scenario(const std::string& name_or_path) {
    if (catalogue().count(name_or_path)) return builtin_scenario(name_or_path);
    return load_scenario_file(name_or_path);
}

void apply_env_overrides(GeoModel& geo) {
    const auto get = [](const char* var) -> const char* { return std::getenv(var); };
    if (const char* v = get("LEOPROP_MU")) geo.mu = std::stod(v);
    if (const char* v = get("LEOPROP_RE")) geo.re = std::stod(v);
    if (const char* v = get("LEOPROP_J2")) geo.j2 = std::stod(v);
    if (const char* v = get("LEOPROP_J3")) geo.j3 = std::stod(v);
    if (const char* v = get("LEOPROP_J4")) geo.j4 = std::stod(v);
}

} // namespace leoprop
