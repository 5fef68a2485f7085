#include "leoprop/intermediary.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "leoprop/astro.hpp"
#include "leoprop/parallax.hpp"
#include "leoprop/perigee.hpp"
#include "leoprop/torsion.hpp"

namespace leoprop {

Ephemeris PolarNodalEphemeris::to_cartesian() const {
    Ephemeris out;
    out.epochs = epochs;
    out.states.reserve(states.size());
    for (const PolarNodal& pn : states) {
        out.states.push_back(polar_nodal_to_cartesian(pn));
    }
    return out;
}

namespace {

// Inverse long-period step: prime elements -> double-prime elements.
Keplerian inverse_long_period(const Keplerian& prime, const GeoModel& geo,
                              bool full_delaunay) {
    const Equinoctial eq = equinoctial_of(prime);
    double f_new, c_new, s_new, inc_new, raan_new, a_new = prime.a;

    if (full_delaunay) {
        const DelaunayLPDeltas d = lp_corrections_delaunay(prime, geo);
        f_new = eq.F - d.dF;
        s_new = eq.S - d.dS;
        c_new = eq.C - d.dC;
        raan_new = prime.raan - d.dh;
        // dL = 0: the semi-major axis is untouched; the inclination follows
        // from the fixed H and the corrected G = L eta.
        const double big_h = std::sqrt(geo.mu * prime.a * (1.0 - prime.e * prime.e)) *
                             std::cos(prime.inc);
        const double e2 = c_new * c_new + s_new * s_new;
        const double big_g = std::sqrt(geo.mu * prime.a * (1.0 - e2));
        inc_new = std::acos(std::clamp(big_h / big_g, -1.0, 1.0));
    } else {
        const SimplifiedLPDeltas d = lp_inverse_simplified(prime, geo);
        // The whole Psi correction lands on F; the node split is O(e^2 J2).
        f_new = eq.F + d.dPsi;
        s_new = eq.S + d.dS;
        c_new = eq.C + d.dC;
        inc_new = prime.inc + d.dI;
        raan_new = prime.raan;
    }

    Keplerian out;
    out.a = a_new;
    out.e = std::hypot(c_new, s_new);
    out.inc = inc_new;
    out.raan = raan_new;
    out.argp = std::atan2(s_new, c_new);
    out.M = f_new - out.argp;
    return out;
}

} // namespace

IntermediaryPropagator::IntermediaryPropagator(const PolarNodal& pn0, double t0,
                                               const GeoModel& geo, IntermediaryKind kind,
                                               IntermediaryOptions options)
    : geo_(geo), kind_(kind), options_(options), t0_(t0) {
    PolarNodal prime = apply_inverse(pn0, geo_);

    PolarNodal dprime = prime;
    if (kind_ == IntermediaryKind::Second) {
        const Keplerian prime_el = polar_nodal_to_keplerian(prime, geo_);
        const Keplerian dprime_el =
            inverse_long_period(prime_el, geo_, options_.full_delaunay_inverse);
        dprime = keplerian_to_polar_nodal(dprime_el, geo_);
    }

    const PolarNodal tilde = torsion_to_tilde(dprime, geo_);
    const Keplerian kel = polar_nodal_to_keplerian(tilde, geo_);
    if (kel.e > options_.ecc_warn_threshold) {
        std::clog << "leoprop: eccentricity " << kel.e
                  << " exceeds the low-e validity assumption; accuracy degrades\n";
    }

    constants_ = {kel.a, kel.e, kel.inc, kel.raan, kel.argp, kel.M,
                  std::sqrt(geo_.mu / (kel.a * kel.a * kel.a))};
    n0_ = tilde.N;
}

PolarNodal IntermediaryPropagator::evaluate_at(double t) const {
    Keplerian kel{constants_.a,    constants_.e,    constants_.inc,
                  constants_.raan, constants_.argp, constants_.M0 + constants_.n * (t - t0_)};
    const PolarNodal tilde = keplerian_to_polar_nodal(kel, geo_);

    PolarNodal pn = torsion_from_tilde(tilde, geo_);
    if (kind_ == IntermediaryKind::Second) {
        NonsingularSet ns = to_nonsingular(pn);
        const NonsingularDeltas d = lp_corrections_nonsingular(ns, geo_);
        ns.psi += d.dpsi;
        ns.xi += d.dxi;
        ns.chi += d.dchi;
        ns.r += d.dr;
        ns.R += d.dR;
        ns.Theta += d.dTheta;
        pn = from_nonsingular(ns, n0_ < 0.0 ? -1.0 : 1.0);
        pn.N = n0_;   // axial symmetry: N untouched by the long-period map
    }
    pn = apply_direct(pn, geo_);
    pn.N = n0_;
    return pn;
}

PolarNodalEphemeris IntermediaryPropagator::propagate(double tf, double dt) const {
    if (!(dt > 0.0)) throw std::invalid_argument("IntermediaryPropagator: dt must be > 0");
    if (!(tf > t0_)) throw std::invalid_argument("IntermediaryPropagator: tf must exceed t0");

    const std::size_t n_pts =
        static_cast<std::size_t>(std::floor((tf - t0_) / dt + 1e-9)) + 1;
    PolarNodalEphemeris eph;
    eph.epochs.reserve(n_pts);
    eph.states.reserve(n_pts);
    for (std::size_t k = 0; k < n_pts; ++k) {
        const double tau = static_cast<double>(k) * dt;
        eph.epochs.push_back(tau);
        eph.states.push_back(evaluate_at(t0_ + tau));
    }
    return eph;
}

PolarNodalEphemeris IntermediaryPropagator::propagate_steps(double tf, int n_steps) const {
    if (n_steps < 1) throw std::invalid_argument("IntermediaryPropagator: n_steps must be >= 1");
    if (!(tf > t0_)) throw std::invalid_argument("IntermediaryPropagator: tf must exceed t0");

    const double dt = (tf - t0_) / static_cast<double>(n_steps);
    PolarNodalEphemeris eph;
    eph.epochs.reserve(static_cast<std::size_t>(n_steps) + 1);
    eph.states.reserve(static_cast<std::size_t>(n_steps) + 1);
    for (int k = 0; k <= n_steps; ++k) {
        const double tau = static_cast<double>(k) * dt;
        eph.epochs.push_back(tau);
        eph.states.push_back(evaluate_at(t0_ + tau));
    }
    return eph;
}

} // namespace leoprop
