#pragma once

#include "leoprop/geomodel.hpp"
#include "leoprop/states.hpp"

namespace leoprop {

/// First-order short-period corrections (common to both directions; the
/// direction only changes the sign and the evaluation chart). dN is always 0.
struct PNDeltas {
    double dr = 0.0;      // [km]
    double dtheta = 0.0;  // [rad]
    double dnu = 0.0;     // [rad]
    double dR = 0.0;      // [km/s]
    double dTheta = 0.0;  // [km^2/s]
    double dN = 0.0;      // identically 0
};

/// Second-order inverse corrections. Only d2r and d2Theta enter the inverse
/// map; d2R is kept for the energy-contribution diagnostic.
struct SecondOrderInverse {
    double d2r = 0.0;      // [km]
    double d2R = 0.0;      // [km/s]
    double d2Theta = 0.0;  // [km^2/s]
};

/**
 * @brief First-order corrections Delta, evaluated in the chart of the argument.
 *
 * Contract: pass the prime state when building the direct map (plus sign) and
 * the osculating state when building the inverse map (minus sign). The deltas
 * are returned without the eps factor or sign.
 */
PNDeltas first_order_corrections(const PolarNodal& pn, const GeoModel& geo);

/// Second-order simplified inverse corrections, functions of the osculating
/// variables (d2r truncated at O(e), d2Theta at O(e^2)).
SecondOrderInverse second_order_inverse_corrections(const PolarNodal& pn, const GeoModel& geo);

/// Direct map prime -> osculating, first order only: x = x' + eps * Delta(x').
PolarNodal apply_direct(const PolarNodal& prime, const GeoModel& geo);

/// Inverse map osculating -> prime, x' = x - eps*Delta(x) + (1/2)eps^2*delta2(x)
/// with delta2 applied to r and Theta only.
PolarNodal apply_inverse(const PolarNodal& oscul, const GeoModel& geo);

/// Contribution of the second-order inverse corrections to the Keplerian
/// energy [km^2/s^2].
double delta_energy(const PolarNodal& pn, const GeoModel& geo);

} // namespace leoprop
