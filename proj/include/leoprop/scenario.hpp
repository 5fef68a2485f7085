#pragma once

#include <string>
#include <vector>

#include "leoprop/geomodel.hpp"
#include "leoprop/states.hpp"

namespace leoprop {

/// Initial elements exactly as they appear at the I/O boundary (angles in
/// degrees, negative values kept as given).
struct ElementsDeg {
    double a_km = 0.0;
    double e = 0.0;
    double inc_deg = 0.0;
    double raan_deg = 0.0;
    double argp_deg = 0.0;
    double mean_anomaly_deg = 0.0;
};

struct Scenario {
    std::string name;
    ElementsDeg elements;
    double duration_s = 86400.0;
    double output_interval_s = 240.0;
    GeoModel geo;

    /// Internal-unit elements (km, rad).
    Keplerian initial_elements() const;
};

/**
 * @brief Parse a scenario from line-oriented "key = value" text.
 *
 * '#' starts a comment; a "format" key is required (schema version 1). Unknown
 * keys, missing fields and out-of-range values raise std::runtime_error with
 * the offending line or field named.
 */
Scenario load_scenario(const std::string& text);

/// Read and parse a scenario file.
Scenario load_scenario_file(const std::string& path);

/// Built-in catalogue (the test-case table): spot4, leo-typical, eyesat,
/// proba2, jason1, cryosat, atv, labs-dove. Throws on unknown names.
Scenario builtin_scenario(const std::string& name);
const std::vector<std::string>& builtin_scenario_names();

/// Builtin name -> catalogue entry, otherwise treat the argument as a path.
Scenario resolve_scenario(const std::string& name_or_path);

/// Apply LEOPROP_MU / LEOPROP_RE / LEOPROP_J2 / LEOPROP_J3 / LEOPROP_J4
/// environment overrides to the scenario's gravity model.
void apply_env_overrides(GeoModel& geo);

} // namespace leoprop
