#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "leoprop/cowell.hpp"
#include "leoprop/intermediary.hpp"
#include "leoprop/scenario.hpp"

namespace leoprop {

enum class Method {
    CowellJ2,
    CowellFull,
    Intermediary1,
    Intermediary2,
};

std::string method_name(Method m);
Method parse_method(const std::string& name);

/// Per-epoch element errors of a method against the full-zonal reference.
/// Angles in radians, wrapped to (-pi, pi].
struct ErrorSeries {
    std::vector<double> epochs;
    std::vector<double> da;      // [km]
    std::vector<double> dI;      // [rad]
    std::vector<double> draan;   // [rad]
    std::vector<double> dF;      // [rad]
    std::vector<double> dC;
    std::vector<double> dS;
};

/// Propagate one method over the scenario grid.
Ephemeris propagate_method(const Scenario& sc, Method m);

/// Element series of an ephemeris (per-epoch osculating elements).
std::vector<Keplerian> element_series(const Ephemeris& eph, const GeoModel& geo);

/// Differences method - reference, element-wise, angles wrapped.
ErrorSeries error_series(const std::vector<double>& epochs,
                         const std::vector<Keplerian>& method,
                         const std::vector<Keplerian>& reference);

/// Run every requested method against the adaptive full-zonal reference.
std::map<Method, ErrorSeries> run_comparison(const Scenario& sc,
                                             const std::vector<Method>& methods);

/// CSV columns: t_s, da_km, dI_deg, dOmega_deg, dF_deg, dC, dS.
/// Full precision (17 significant digits); values re-parse bitwise.
void emit_error_csv(const ErrorSeries& series, std::ostream& out);
void emit_error_csv(const ErrorSeries& series, const std::string& path);

/// CSV columns: t_s, x_km, y_km, z_km, vx_kms, vy_kms, vz_kms.
void emit_ephemeris_csv(const Ephemeris& eph, std::ostream& out);
void emit_ephemeris_csv(const Ephemeris& eph, const std::string& path);

} // namespace leoprop
