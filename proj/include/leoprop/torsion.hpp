#pragma once

#include "leoprop/geomodel.hpp"
#include "leoprop/states.hpp"

namespace leoprop {

/// Phi^2 and the partial derivatives used by the angle equations.
struct TorsionCoefficients {
    double phi2 = 1.0;
    double phi = 1.0;
    double dphi2_dc = 0.0;
    double dphi2_deps = 0.0;
};

/// Phi^2 = 1 - eps(1-3c^2) + (1/4)eps^2 [1 - 21c^4 + (3/2)J4t(3 - 30c^2 + 35c^4)]
/// and its partials. Throws if Phi^2 <= 0 (outside the validity domain).
TorsionCoefficients phi_squared(double eps, double c, double j4_tilde);

/**
 * @brief Forward torsion: quasi-Keplerian -> Keplerian (tilde) chart.
 *
 * r, R, N are untouched; Theta~ = Theta*Phi exactly; theta~ and nu~ follow from
 * the chain-rule angle equations. Throws if the theta bracket vanishes.
 */
PolarNodal torsion_to_tilde(const PolarNodal& pn, const GeoModel& geo);

/**
 * @brief Backward torsion: tilde -> quasi-Keplerian chart.
 *
 * Theta is recovered with the single closed-form Newton-Raphson step (residual
 * O(J2^3)); the angle equations are then evaluated at the recovered momenta.
 */
PolarNodal torsion_from_tilde(const PolarNodal& tilde, const GeoModel& geo);

} // namespace leoprop
