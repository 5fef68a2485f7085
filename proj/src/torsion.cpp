#include "leoprop/torsion.hpp"

#include <cmath>
#include <stdexcept>

#include "leoprop/astro.hpp"

namespace leoprop {

TorsionCoefficients phi_squared(double eps, double c, double j4_tilde) {
    if (std::abs(c) > 1.0 + 1e-12) {
        throw std::invalid_argument("phi_squared: |c| > 1");
    }
    const double c2 = c * c;
    const double c4 = c2 * c2;

    TorsionCoefficients tc;
    tc.phi2 = 1.0 - eps * (1.0 - 3.0 * c2) +
              0.25 * eps * eps *
                  (1.0 - 21.0 * c4 + 1.5 * j4_tilde * (3.0 - 30.0 * c2 + 35.0 * c4));
    if (!(tc.phi2 > 0.0)) {
        throw std::runtime_error("phi_squared: Phi^2 <= 0, outside the validity domain");
    }
    tc.phi = std::sqrt(tc.phi2);
    tc.dphi2_dc = 3.0 * eps * c * (2.0 - eps * (7.0 * c2 + 2.5 * (3.0 - 7.0 * c2) * j4_tilde));
    tc.dphi2_deps =
        -1.0 + 3.0 * c2 +
        0.5 * eps * (1.0 - 21.0 * c4 + 1.5 * (3.0 - 30.0 * c2 + 35.0 * c4) * j4_tilde);
    return tc;
}

namespace {

// theta = (theta~/Phi) * bracket, nu = nu~ + (1/2)(theta~/Phi) dPhi2/dc.
double theta_bracket(const TorsionCoefficients& tc, double eps, double c) {
    return tc.phi2 - 2.0 * eps * tc.dphi2_deps - 0.5 * c * tc.dphi2_dc;
}

} // namespace

PolarNodal torsion_to_tilde(const PolarNodal& pn, const GeoModel& geo) {
    const AuxQuantities q = aux_quantities(pn, geo);
    const TorsionCoefficients tc = phi_squared(q.eps, q.c, geo.j4_tilde());

    const double bracket = theta_bracket(tc, q.eps, q.c);
    if (std::abs(bracket) < 1e-8) {
        throw std::runtime_error("torsion_to_tilde: vanishing angle bracket");
    }

    PolarNodal tilde = pn;
    tilde.Theta = pn.Theta * tc.phi;
    tilde.theta = pn.theta * tc.phi / bracket;
    tilde.nu = pn.nu - 0.5 * (tilde.theta / tc.phi) * tc.dphi2_dc;
    return tilde;
}

PolarNodal torsion_from_tilde(const PolarNodal& tilde, const GeoModel& geo) {
    if (!(tilde.Theta > 0.0)) throw std::invalid_argument("torsion_from_tilde: invalid state");
    const double j4t = geo.j4_tilde();

    // Single closed-form Newton-Raphson step for Theta (O(J2^3) residual).
    const double ct = tilde.N / tilde.Theta;
    const double ct2 = ct * ct;
    const double ct4 = ct2 * ct2;
    const double pt = tilde.Theta * tilde.Theta / geo.mu;
    const double epst = geo.eps(pt);
    const double big_theta =
        tilde.Theta *
        (1.0 + 0.5 * epst * (1.0 - 3.0 * ct2) -
         0.75 * epst * epst *
             (0.25 * (3.0 - 30.0 * ct2 + 35.0 * ct4) * j4t + 1.0 - 7.0 * ct2 + 10.0 * ct4));

    // Angle equations evaluated at the recovered momenta.
    const double p = big_theta * big_theta / geo.mu;
    const double eps = geo.eps(p);
    const double c = tilde.N / big_theta;
    const TorsionCoefficients tc = phi_squared(eps, c, j4t);
    const double bracket = theta_bracket(tc, eps, c);

    PolarNodal pn = tilde;
    pn.Theta = big_theta;
    pn.theta = (tilde.theta / tc.phi) * bracket;
    pn.nu = tilde.nu + 0.5 * (tilde.theta / tc.phi) * tc.dphi2_dc;
    return pn;
}

} // namespace leoprop
