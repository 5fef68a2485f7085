#include "leoprop/astro.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leoprop {

double wrap_pi(double angle) {
    double w = std::remainder(angle, kTwoPi);
    if (w <= -kPi) w += kTwoPi;
    return w;
}

double solve_kepler(double mean_anom, double ecc) {
    if (!(ecc >= 0.0 && ecc < 1.0)) {
        throw std::invalid_argument("solve_kepler: eccentricity must be in [0, 1)");
    }
    if (!std::isfinite(mean_anom)) {
        throw std::invalid_argument("solve_kepler: mean anomaly must be finite");
    }

    // Solve in the principal revolution, then restore the offset so that the
    // returned anomaly stays in the same revolution as M.
    const double mw = wrap_pi(mean_anom);
    const double rev = mean_anom - mw;

    constexpr double tol = 1e-14;
    constexpr int max_iter = 50;

    double ea = mw + ecc * std::sin(mw);
    double lo = mw - ecc - 1e-3;
    double hi = mw + ecc + 1e-3;
    bool converged = false;
    for (int i = 0; i < max_iter; ++i) {
        const double se = std::sin(ea);
        const double f = ea - ecc * se - mw;
        if (std::abs(f) < tol) {
            converged = true;
            break;
        }
        // Keep the bisection bracket current (g is monotone increasing).
        if (f > 0.0) {
            hi = ea;
        } else {
            lo = ea;
        }
        const double fp = 1.0 - ecc * std::cos(ea);
        double next = ea - f / fp;
        if (next <= lo || next >= hi) {
            next = 0.5 * (lo + hi);   // fallback when Newton leaves the bracket
        }
        ea = next;
    }
    if (!converged) {
        // Last residual check: the loop may exit with the final update applied.
        if (std::abs(ea - ecc * std::sin(ea) - mw) >= tol) {
            throw std::runtime_error("solve_kepler: no convergence after 50 iterations");
        }
    }
    return ea + rev;
}

double eccentric_to_true(double ecc_anom, double ecc) {
    const double ew = wrap_pi(ecc_anom);
    const double rev = ecc_anom - ew;
    const double f = 2.0 * std::atan2(std::sqrt(1.0 + ecc) * std::sin(0.5 * ew),
                                      std::sqrt(1.0 - ecc) * std::cos(0.5 * ew));
    return f + rev;
}

double true_to_eccentric(double true_anom, double ecc) {
    const double fw = wrap_pi(true_anom);
    const double rev = true_anom - fw;
    const double ea = 2.0 * std::atan2(std::sqrt(1.0 - ecc) * std::sin(0.5 * fw),
                                       std::sqrt(1.0 + ecc) * std::cos(0.5 * fw));
    return ea + rev;
}

PolarNodal keplerian_to_polar_nodal(const Keplerian& el, const GeoModel& geo) {
    if (!(el.a > 0.0)) throw std::invalid_argument("keplerian_to_polar_nodal: a must be > 0");
    if (!(el.e >= 0.0 && el.e < 1.0)) {
        throw std::invalid_argument("keplerian_to_polar_nodal: e must be in [0, 1)");
    }

    const double p = el.a * (1.0 - el.e * el.e);
    const double big_theta = std::sqrt(geo.mu * p);
    const double ea = solve_kepler(el.M, el.e);
    const double f = eccentric_to_true(ea, el.e);

    PolarNodal pn;
    pn.r = p / (1.0 + el.e * std::cos(f));
    pn.theta = f + el.argp;
    pn.nu = el.raan;
    pn.R = (big_theta / p) * el.e * std::sin(f);
    pn.Theta = big_theta;
    pn.N = big_theta * std::cos(el.inc);
    return pn;
}

Keplerian polar_nodal_to_keplerian(const PolarNodal& pn, const GeoModel& geo) {
    if (!(pn.r > 0.0) || !(pn.Theta > 0.0)) {
        throw std::invalid_argument("polar_nodal_to_keplerian: invalid state");
    }
    const double p = pn.Theta * pn.Theta / geo.mu;
    const double kappa = p / pn.r - 1.0;
    const double sigma = p * pn.R / pn.Theta;
    const double e = std::hypot(kappa, sigma);
    if (e >= 1.0) {
        throw std::invalid_argument("polar_nodal_to_keplerian: unbound state");
    }

    const double f = std::atan2(sigma, kappa);
    const double ea = true_to_eccentric(f, e);

    Keplerian el;
    el.a = p / (1.0 - e * e);
    el.e = e;
    el.inc = std::acos(std::clamp(pn.N / pn.Theta, -1.0, 1.0));
    el.raan = pn.nu;
    el.argp = pn.theta - f;
    el.M = ea - e * std::sin(ea);
    return el;
}

CartesianState polar_nodal_to_cartesian(const PolarNodal& pn) {
    if (!(pn.r > 0.0)) throw std::invalid_argument("polar_nodal_to_cartesian: r must be > 0");

    const double c = std::clamp(pn.N / pn.Theta, -1.0, 1.0);
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double ct = std::cos(pn.theta), st = std::sin(pn.theta);
    const double cn = std::cos(pn.nu), sn = std::sin(pn.nu);

    // Unit radial vector and its theta-derivative in the inertial frame.
    const Vec3 u{cn * ct - sn * c * st, sn * ct + cn * c * st, s * st};
    const Vec3 du{-cn * st - sn * c * ct, -sn * st + cn * c * ct, s * ct};

    CartesianState out;
    out.position = pn.r * u;
    out.velocity = pn.R * u + (pn.Theta / pn.r) * du;
    return out;
}

PolarNodal cartesian_to_polar_nodal(const CartesianState& state) {
    const double r = norm(state.position);
    if (!(r > 0.0)) throw std::invalid_argument("cartesian_to_polar_nodal: zero radius");

    const Vec3 h = cross(state.position, state.velocity);
    const double big_theta = norm(h);
    if (!(big_theta > 0.0)) {
        throw std::invalid_argument("cartesian_to_polar_nodal: rectilinear motion");
    }

    PolarNodal pn;
    pn.r = r;
    pn.R = dot(state.position, state.velocity) / r;
    pn.Theta = big_theta;
    pn.N = h.z;

    // Node: for equatorial orbits (h x z = 0) the node is conventionally 0.
    const double hxy = std::hypot(h.x, h.y);
    pn.nu = (hxy > 0.0) ? std::atan2(h.x, -h.y) : 0.0;

    const double cn = std::cos(pn.nu), sn = std::sin(pn.nu);
    const double c = pn.N / big_theta;
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const Vec3 n_hat{cn, sn, 0.0};
    const Vec3 m_hat{-c * sn, c * cn, s};   // h_hat x n_hat
    pn.theta = std::atan2(dot(state.position, m_hat), dot(state.position, n_hat));
    return pn;
}

AuxQuantities aux_quantities(const PolarNodal& pn, const GeoModel& geo) {
    if (!(pn.r > 0.0) || !(pn.Theta > 0.0)) {
        throw std::invalid_argument("aux_quantities: invalid state");
    }
    AuxQuantities q;
    q.p = pn.Theta * pn.Theta / geo.mu;
    q.c = pn.N / pn.Theta;
    q.s = std::sqrt(std::max(0.0, 1.0 - q.c * q.c));
    q.kappa = q.p / pn.r - 1.0;
    q.sigma = q.p * pn.R / pn.Theta;
    q.e = std::hypot(q.kappa, q.sigma);
    if (q.e >= 1.0) throw std::invalid_argument("aux_quantities: unbound state");
    q.eta = std::sqrt(1.0 - q.e * q.e);
    q.eps = geo.eps(q.p);
    q.eps3 = geo.eps3(q.p);
    return q;
}

Equinoctial equinoctial_of(const Keplerian& el) {
    return {el.M + el.argp, el.e * std::cos(el.argp), el.e * std::sin(el.argp)};
}

DelaunayVars delaunay_of(const Keplerian& el, const GeoModel& geo) {
    DelaunayVars d;
    d.l = el.M;
    d.g = el.argp;
    d.h = el.raan;
    d.L = std::sqrt(geo.mu * el.a);
    d.G = d.L * std::sqrt(1.0 - el.e * el.e);
    d.H = d.G * std::cos(el.inc);
    return d;
}

Keplerian keplerian_of(const DelaunayVars& d, const GeoModel& geo) {
    if (!(d.L >= d.G && d.G >= std::abs(d.H) && d.G > 0.0)) {
        throw std::invalid_argument("keplerian_of: Delaunay invariants violated");
    }
    Keplerian el;
    el.a = d.L * d.L / geo.mu;
    const double eta = d.G / d.L;
    el.e = std::sqrt(std::max(0.0, 1.0 - eta * eta));
    el.inc = std::acos(std::clamp(d.H / d.G, -1.0, 1.0));
    el.raan = d.h;
    el.argp = d.g;
    el.M = d.l;
    return el;
}

} // namespace leoprop
