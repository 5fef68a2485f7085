#pragma once

#include "leoprop/geomodel.hpp"
#include "leoprop/states.hpp"

namespace leoprop {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wrap an angle to (-pi, pi].
double wrap_pi(double angle);

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }

/**
 * @brief Solve Kepler's equation E - e sin E = M.
 *
 * Newton iteration started at E0 = M + e sin M with a bisection fallback.
 * The returned E lies in the same revolution as M (E - M is bounded), so the
 * anomaly can be propagated on the real line without 2*pi jumps.
 */
double solve_kepler(double mean_anom, double ecc);

/// True anomaly from eccentric anomaly, preserving the revolution count.
double eccentric_to_true(double ecc_anom, double ecc);

/// Eccentric anomaly from true anomaly, preserving the revolution count.
double true_to_eccentric(double true_anom, double ecc);

/// Elements -> polar-nodal chart (one Kepler solve). Throws for e >= 1.
PolarNodal keplerian_to_polar_nodal(const Keplerian& el, const GeoModel& geo);

/// Polar-nodal -> elements, algebraic in the anomaly (f = atan2(sigma, kappa)).
/// Throws for unbound states.
Keplerian polar_nodal_to_keplerian(const PolarNodal& pn, const GeoModel& geo);

/// Exact rotation between the polar-nodal chart and Cartesian coordinates.
CartesianState polar_nodal_to_cartesian(const PolarNodal& pn);
PolarNodal cartesian_to_polar_nodal(const CartesianState& state);

/// Derived quantities (p, eta, e, c, s, kappa, sigma, eps, eps3) of a state.
AuxQuantities aux_quantities(const PolarNodal& pn, const GeoModel& geo);

/// F = M + argp, C = e cos(argp), S = e sin(argp).
Equinoctial equinoctial_of(const Keplerian& el);

DelaunayVars delaunay_of(const Keplerian& el, const GeoModel& geo);
Keplerian keplerian_of(const DelaunayVars& d, const GeoModel& geo);

} // namespace leoprop
