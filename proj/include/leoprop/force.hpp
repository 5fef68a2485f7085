#pragma once

#include "leoprop/geomodel.hpp"
#include "leoprop/states.hpp"

namespace leoprop {

/// Gravity model used by the numerical propagators. FullZonal is degrees 2-4.
enum class ZonalModel {
    KeplerOnly,
    J2Only,
    FullZonal,
};

struct LegendreP234 {
    double p2 = 0.0;
    double p3 = 0.0;
    double p4 = 0.0;
};

/// Legendre polynomials of degree 2-4 at sin(latitude).
LegendreP234 legendre_p234(double sin_phi);

/**
 * @brief Disturbing part of the zonal potential (energy per unit mass).
 *
 * Potential-energy convention: the total potential is -mu/r + Z with
 * Z = (mu/r) sum_m (re/r)^m J_m P_m(sin phi), so that the Hamiltonian of the
 * motion is (1/2)v^2 - mu/r + Z. KeplerOnly returns 0.
 */
double zonal_disturbing(const CartesianState& state, const GeoModel& geo, ZonalModel kind);

/// Total potential -mu/r + Z.
double total_potential(const CartesianState& state, const GeoModel& geo, ZonalModel kind);

/// Acceleration = -grad(total potential), in closed form.
Vec3 zonal_acceleration(const CartesianState& state, const GeoModel& geo, ZonalModel kind);

/// Keplerian energy (1/2)(R^2 + Theta^2/r^2) - mu/r of a polar-nodal state.
double hamiltonian_polar_nodal(const PolarNodal& pn, const GeoModel& geo);

/// Quasi-Keplerian value (1/2)(R^2 + Theta^2 Phi^2/r^2) - mu/r.
double hamiltonian_quasi_keplerian(const PolarNodal& pn, double phi2, const GeoModel& geo);

} // namespace leoprop
