#include "leoprop/force.hpp"

#include <cmath>
#include <stdexcept>

namespace leoprop {

LegendreP234 legendre_p234(double sin_phi) {
    if (std::abs(sin_phi) > 1.0 + 1e-12) {
        throw std::invalid_argument("legendre_p234: |sin phi| > 1");
    }
    const double u = sin_phi;
    const double u2 = u * u;
    LegendreP234 p;
    p.p2 = 0.5 * (3.0 * u2 - 1.0);
    p.p3 = 0.5 * u * (5.0 * u2 - 3.0);
    p.p4 = 0.125 * ((35.0 * u2 - 30.0) * u2 + 3.0);
    return p;
}

namespace {

// dP_m/du for m = 2, 3, 4.
struct LegendreDeriv {
    double d2, d3, d4;
};

LegendreDeriv legendre_deriv_p234(double u) {
    const double u2 = u * u;
    return {3.0 * u, 1.5 * (5.0 * u2 - 1.0), 2.5 * u * (7.0 * u2 - 3.0)};
}

} // namespace

double zonal_disturbing(const CartesianState& state, const GeoModel& geo, ZonalModel kind) {
    if (kind == ZonalModel::KeplerOnly) return 0.0;
    const double r = norm(state.position);
    if (!(r > 0.0)) throw std::invalid_argument("zonal_disturbing: zero radius");

    const double u = state.position.z / r;
    const LegendreP234 p = legendre_p234(u);
    const double q = geo.re / r;
    const double q2 = q * q;

    double z = geo.j2 * q2 * p.p2;
    if (kind == ZonalModel::FullZonal) {
        z += geo.j3 * q2 * q * p.p3 + geo.j4 * q2 * q2 * p.p4;
    }
    return (geo.mu / r) * z;
}

double total_potential(const CartesianState& state, const GeoModel& geo, ZonalModel kind) {
    const double r = norm(state.position);
    if (!(r > 0.0)) throw std::invalid_argument("total_potential: zero radius");
    return -geo.mu / r + zonal_disturbing(state, geo, kind);
}

Vec3 zonal_acceleration(const CartesianState& state, const GeoModel& geo, ZonalModel kind) {
    const double r2 = dot(state.position, state.position);
    const double r = std::sqrt(r2);
    if (!(r > 0.0)) throw std::invalid_argument("zonal_acceleration: zero radius");

    const Vec3 rhat = (1.0 / r) * state.position;
    Vec3 acc = (-geo.mu / (r2 * r)) * state.position;
    if (kind == ZonalModel::KeplerOnly) return acc;

    const double u = state.position.z / r;
    const LegendreP234 p = legendre_p234(u);
    const LegendreDeriv dp = legendre_deriv_p234(u);
    const Vec3 zhat{0.0, 0.0, 1.0};
    const Vec3 grad_u = zhat - u * rhat;   // times 1/r below

    // a = -grad(-mu/r + sum_m mu J_m re^m r^-(m+1) P_m(z/r))
    //   = -mu r/r^3 + sum_m mu J_m re^m r^-(m+2) [(m+1) P_m rhat - P'_m (zhat - u rhat)]
    const double q = geo.re / r;
    const double mu_r2 = geo.mu / r2;

    acc += mu_r2 * geo.j2 * q * q * (3.0 * p.p2 * rhat - dp.d2 * grad_u);
    if (kind == ZonalModel::FullZonal) {
        acc += mu_r2 * geo.j3 * q * q * q * (4.0 * p.p3 * rhat - dp.d3 * grad_u);
        acc += mu_r2 * geo.j4 * q * q * q * q * (5.0 * p.p4 * rhat - dp.d4 * grad_u);
    }
    return acc;
}

double hamiltonian_polar_nodal(const PolarNodal& pn, const GeoModel& geo) {
    const double t_over_r = pn.Theta / pn.r;
    return 0.5 * (pn.R * pn.R + t_over_r * t_over_r) - geo.mu / pn.r;
}

double hamiltonian_quasi_keplerian(const PolarNodal& pn, double phi2, const GeoModel& geo) {
    const double t_over_r = pn.Theta / pn.r;
    return 0.5 * (pn.R * pn.R + t_over_r * t_over_r * phi2) - geo.mu / pn.r;
}

} // namespace leoprop
