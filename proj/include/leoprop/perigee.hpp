#pragma once

#include "leoprop/geomodel.hpp"
#include "leoprop/states.hpp"

namespace leoprop {

/// Nonsingular non-canonical set (psi, xi, chi, r, R, Theta):
/// psi = theta + nu, xi = sinI sin(theta), chi = sinI cos(theta).
struct NonsingularSet {
    double psi = 0.0;
    double xi = 0.0;
    double chi = 0.0;
    double r = 0.0;
    double R = 0.0;
    double Theta = 0.0;
};

struct NonsingularDeltas {
    double dpsi = 0.0;
    double dxi = 0.0;
    double dchi = 0.0;
    double dr = 0.0;
    double dR = 0.0;
    double dTheta = 0.0;
};

/// Long-period corrections in the (F, S, C, h) block; dH = dL = 0 structurally.
struct DelaunayLPDeltas {
    double dF = 0.0;
    double dS = 0.0;
    double dC = 0.0;
    double dh = 0.0;
    double dH = 0.0;
    double dL = 0.0;
};

/// Simplified inverse corrections (already carry the inverse sign; add them to
/// the prime values). dC is identically 0.
struct SimplifiedLPDeltas {
    double dPsi = 0.0;  // correction to Psi = M + argp + raan [rad]
    double dS = 0.0;
    double dC = 0.0;
    double dI = 0.0;    // correction to the inclination [rad]
};

NonsingularSet to_nonsingular(const PolarNodal& pn);

/// Inverse of to_nonsingular. c_sign (+1/-1) restores the sign of cosI that
/// the square root loses. Throws if xi^2 + chi^2 > 1 + 1e-12.
PolarNodal from_nonsingular(const NonsingularSet& ns, double c_sign);

/**
 * @brief Long-period corrections in the nonsingular set, c = sqrt(1-xi^2-chi^2).
 *
 * Used for the direct transformation: evaluate in the double-prime variables
 * and add the deltas. All terms are linear in (kappa, sigma, xi, chi).
 */
NonsingularDeltas lp_corrections_nonsingular(const NonsingularSet& ns, const GeoModel& geo);

/**
 * @brief Long-period corrections on (F, S, C, h), full first-order set.
 *
 * Direct: evaluate in double-prime variables, add. Inverse: evaluate in prime
 * variables, subtract. Invalid near the equator: throws below s_min (default
 * sin 5 deg), directing the caller to the nonsingular or simplified sets.
 */
DelaunayLPDeltas lp_corrections_delaunay(const Keplerian& el, const GeoModel& geo,
                                         double s_min = 0.08715574274765817);

/// Simplified inverse corrections, evaluated in prime variables, O(e^2 J2)
/// neglected. These match SGP4's long-period gravitational corrections with
/// the opposite sign (SGP4 applies them as direct corrections).
SimplifiedLPDeltas lp_inverse_simplified(const Keplerian& el, const GeoModel& geo);

} // namespace leoprop
