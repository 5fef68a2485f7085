#include "leoprop/perigee.hpp"

#include <cmath>
#include <stdexcept>

#include "leoprop/astro.hpp"

namespace leoprop {

NonsingularSet to_nonsingular(const PolarNodal& pn) {
    if (!(pn.r > 0.0) || !(pn.Theta > 0.0)) {
        throw std::invalid_argument("to_nonsingular: invalid state");
    }
    const double c = pn.N / pn.Theta;
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));

    NonsingularSet ns;
    ns.psi = pn.theta + pn.nu;
    ns.xi = s * std::sin(pn.theta);
    ns.chi = s * std::cos(pn.theta);
    ns.r = pn.r;
    ns.R = pn.R;
    ns.Theta = pn.Theta;
    return ns;
}

PolarNodal from_nonsingular(const NonsingularSet& ns, double c_sign) {
    const double rho2 = ns.xi * ns.xi + ns.chi * ns.chi;
    if (rho2 > 1.0 + 1e-12) {
        throw std::invalid_argument("from_nonsingular: xi^2 + chi^2 > 1");
    }
    const double c = (c_sign < 0.0 ? -1.0 : 1.0) * std::sqrt(std::max(0.0, 1.0 - rho2));

    PolarNodal pn;
    pn.theta = std::atan2(ns.xi, ns.chi);
    pn.nu = ns.psi - pn.theta;
    pn.r = ns.r;
    pn.R = ns.R;
    pn.Theta = ns.Theta;
    pn.N = c * ns.Theta;
    return pn;
}

NonsingularDeltas lp_corrections_nonsingular(const NonsingularSet& ns, const GeoModel& geo) {
    const double rho2 = ns.xi * ns.xi + ns.chi * ns.chi;
    if (rho2 > 1.0 + 1e-12) {
        throw std::invalid_argument("lp_corrections_nonsingular: xi^2 + chi^2 > 1");
    }
    const double c = std::sqrt(std::max(0.0, 1.0 - rho2));
    const double p = ns.Theta * ns.Theta / geo.mu;
    const double kappa = p / ns.r - 1.0;
    const double sigma = p * ns.R / ns.Theta;
    const double e3 = geo.eps3(p);

    NonsingularDeltas d;
    d.dpsi = e3 * (2.0 * ns.chi + (kappa * ns.chi - c * ns.xi * sigma) / (1.0 + c));
    d.dxi = e3 * (2.0 * ns.chi * ns.chi + kappa * (1.0 - ns.xi * ns.xi));
    d.dchi = -e3 * (c * c * sigma + (2.0 + kappa) * ns.xi * ns.chi);
    d.dr = e3 * ns.xi * p;
    d.dR = e3 * (1.0 + kappa) * ns.chi * ns.Theta / ns.r;
    d.dTheta = e3 * (kappa * ns.xi - sigma * ns.chi) * ns.Theta;
    return d;
}

DelaunayLPDeltas lp_corrections_delaunay(const Keplerian& el, const GeoModel& geo, double s_min) {
    const double s = std::sin(el.inc);
    if (s < s_min) {
        throw std::invalid_argument(
            "lp_corrections_delaunay: inclination below the validity threshold; "
            "use the nonsingular or simplified corrections instead");
    }
    const double c = std::cos(el.inc);
    const double eta = std::sqrt(1.0 - el.e * el.e);
    const double p = el.a * eta * eta;
    const double e3 = geo.eps3(p);
    const Equinoctial eq = equinoctial_of(el);

    DelaunayLPDeltas d;
    d.dF = e3 * (1.0 / s - s * (1.0 + eta + 1.0 / (1.0 + eta))) * eq.C;
    d.dS = e3 * (eq.C * eq.C * (1.0 / s - s) - s * (1.0 - eq.S * eq.S));
    d.dC = -e3 * (1.0 / s - 2.0 * s) * eq.C * eq.S;
    d.dh = -e3 * (c / s) * eq.C;
    d.dH = 0.0;
    d.dL = 0.0;
    return d;
}

SimplifiedLPDeltas lp_inverse_simplified(const Keplerian& el, const GeoModel& geo) {
    const double s = std::sin(el.inc);
    const double c = std::cos(el.inc);
    const double p = el.a * (1.0 - el.e * el.e);
    const double e3 = geo.eps3(p);
    const Equinoctial eq = equinoctial_of(el);

    SimplifiedLPDeltas d;
    d.dPsi = e3 * (3.0 + 5.0 * c) / (2.0 * (1.0 + c)) * s * eq.C;
    d.dS = e3 * s;
    d.dC = 0.0;
    d.dI = -e3 * c * eq.S;
    return d;
}

} // namespace leoprop
