#include <doctest.h>

#include <array>
#include <cmath>

#include "leoprop/astro.hpp"
#include "leoprop/parallax.hpp"
#include "test_util.hpp"

using namespace leoprop;

namespace {

const GeoModel kGeo{};

Keplerian spot4_elements() {
    Keplerian el;
    el.a = 7081.1390;
    el.e = 0.0158;
    el.inc = deg2rad(98.0);
    el.raan = deg2rad(164.02);
    el.argp = 0.0;
    el.M = 0.37;   // off-perigee so no term vanishes by accident
    return el;
}

// ---------------------------------------------------------------------------
// Dual-coded oracle: a literal, term-by-term transcription of the printed
// correction formulas, kept independent of src/parallax.cpp (no shared
// subexpressions, trig evaluated per term).
// ---------------------------------------------------------------------------

struct OracleDeltas {
    double r, th, nu, R, Th;
};

OracleDeltas oracle_first_order(const PolarNodal& x, const GeoModel& g) {
    const double p = x.Theta * x.Theta / g.mu;
    const double c = x.N / x.Theta;
    const double s2 = 1.0 - c * c;
    const double kap = p / x.r - 1.0;
    const double sig = p * x.R / x.Theta;

    OracleDeltas d{};
    d.r = p * (1.0 - (3.0 / 2.0) * s2 - (1.0 / 2.0) * s2 * std::cos(2.0 * x.theta));
    d.th = (1.0 - 6.0 * c * c + (1.0 - 2.0 * c * c) * std::cos(2.0 * x.theta)) * sig -
           ((1.0 / 4.0) - (7.0 / 4.0) * c * c + (1.0 - 3.0 * c * c) * kap) *
               std::sin(2.0 * x.theta);
    d.nu = c * ((3.0 + std::cos(2.0 * x.theta)) * sig -
                ((3.0 / 2.0) + 2.0 * kap) * std::sin(2.0 * x.theta));
    d.R = (x.Theta / x.r) * (1.0 + kap) * s2 * std::sin(2.0 * x.theta);
    d.Th = -x.Theta * s2 *
           (((3.0 / 2.0) + 2.0 * kap) * std::cos(2.0 * x.theta) + sig * std::sin(2.0 * x.theta));
    return d;
}

OracleDeltas oracle_second_order(const PolarNodal& x, const GeoModel& g) {
    const double p = x.Theta * x.Theta / g.mu;
    const double c = x.N / x.Theta;
    const double c2 = c * c, c4 = c2 * c2;
    const double s = std::sqrt(1.0 - c2);
    const double s2 = s * s, s3 = s * s * s, s4 = s2 * s2;
    const double kap = p / x.r - 1.0;
    const double sig = p * x.R / x.Theta;
    const double j3t = g.j2 != 0.0 ? g.j3 / (g.j2 * g.j2) : 0.0;
    const double j4t = g.j2 != 0.0 ? g.j4 / (g.j2 * g.j2) : 0.0;
    const double th = x.theta;

    OracleDeltas d{};
    d.r = p * (-3.0 + 10.0 * c2 + c4 - (4.0 - 32.0 * c2) * s2 * std::cos(2.0 * th) -
               s4 * std::cos(4.0 * th) -
               (3.0 / 2.0) * (p / g.re) * j3t *
                   ((1.0 - 5.0 * c2) * s * std::sin(th) + (5.0 / 6.0) * s3 * std::sin(3.0 * th)) -
               j4t * ((9.0 / 8.0) * (3.0 - 30.0 * c2 + 35.0 * c4) +
                      (5.0 / 2.0) * (1.0 - 7.0 * c2) * s2 * std::cos(2.0 * th) -
                      (7.0 / 8.0) * s4 * std::cos(4.0 * th)));

    d.R = (x.Theta / p) *
          (s2 * (2.0 - 22.0 * c2) * std::sin(2.0 * th) + s4 * std::sin(4.0 * th) +
           (3.0 / 2.0) * (p / g.re) * j3t *
               ((1.0 - 5.0 * c2) * s * std::cos(th) - (5.0 / 2.0) * s3 * std::cos(3.0 * th)) +
           j4t * (5.0 * (1.0 - 7.0 * c2) * s2 * std::sin(2.0 * th) -
                  (7.0 / 2.0) * s4 * std::sin(4.0 * th)));

    d.Th = x.Theta *
           (-((1.0 / 4.0) * (7.0 - 25.0 * c2) + 6.0 * (1.0 - 3.0 * c2) * kap) * s2 -
            ((3.0 / 2.0) * (1.0 - 9.0 * c2) + (4.0 - 44.0 * c2) * kap) * s2 * std::cos(2.0 * th) -
            sig * (2.0 - 28.0 * c2) * s2 * std::sin(2.0 * th) +
            (3.0 / 4.0) * s4 * std::cos(4.0 * th) - (3.0 / 2.0) * sig * s4 * std::sin(4.0 * th) +
            (p / g.re) * j3t *
                ((3.0 / 2.0) * (1.0 - 5.0 * c2) * s *
                     (sig * std::cos(th) + (2.0 + kap) * std::sin(th)) -
                 (5.0 / 4.0) * (4.0 + 9.0 * kap) * s3 * std::sin(3.0 * th) +
                 (15.0 / 4.0) * sig * s3 * std::cos(3.0 * th)) -
            j4t * ((5.0 / 2.0) * (1.0 - 7.0 * c2) * s2 *
                       (2.0 * sig * std::sin(2.0 * th) + (1.0 + 4.0 * kap) * std::cos(2.0 * th)) -
                   (7.0 / 8.0) * (5.0 + 16.0 * kap) * s4 * std::cos(4.0 * th) -
                   (7.0 / 2.0) * sig * s4 * std::sin(4.0 * th)));
    return d;
}

// Per-variable scales for componentwise relative residuals.
std::array<double, 6> residual(const PolarNodal& a, const PolarNodal& b) {
    const double vscale = b.Theta / b.r;
    return {std::abs(a.r - b.r) / b.r,
            std::abs(a.theta - b.theta),
            std::abs(a.nu - b.nu),
            std::abs(a.R - b.R) / vscale,
            std::abs(a.Theta - b.Theta) / b.Theta,
            std::abs(a.N - b.N) / b.Theta};
}

} // namespace

TEST_CASE("first-order corrections: equatorial and circular substitutions") {
    // Equatorial (s = 0): every s^2-factored term vanishes, dr reduces to p.
    Keplerian el;
    el.a = 7000.0;
    el.e = 0.02;
    el.inc = 0.0;
    el.argp = 0.8;
    el.M = 0.5;
    const PolarNodal eq = keplerian_to_polar_nodal(el, kGeo);
    const PNDeltas de = first_order_corrections(eq, kGeo);
    const double p = eq.Theta * eq.Theta / kGeo.mu;
    CHECK(de.dr == doctest::Approx(p).epsilon(1e-13));
    CHECK(de.dR == 0.0);
    CHECK(de.dTheta == 0.0);
    CHECK(de.dN == 0.0);

    // Circular (kappa = sigma = 0).
    el.e = 0.0;
    el.inc = 1.1;
    const PolarNodal circ = keplerian_to_polar_nodal(el, kGeo);
    const PNDeltas dc = first_order_corrections(circ, kGeo);
    const double s2 = std::sin(el.inc) * std::sin(el.inc);
    CHECK(dc.dR ==
          doctest::Approx((circ.Theta / circ.r) * s2 * std::sin(2.0 * circ.theta)).epsilon(1e-10));
    CHECK(dc.dTheta ==
          doctest::Approx(-1.5 * circ.Theta * s2 * std::cos(2.0 * circ.theta)).epsilon(1e-10));
}

TEST_CASE("corrections match the dual-coded oracle") {
    test::StateGen gen(41);
    std::vector<PolarNodal> states;
    states.push_back(keplerian_to_polar_nodal(spot4_elements(), kGeo));
    for (int i = 0; i < 100; ++i) states.push_back(gen.polar_nodal(kGeo));

    for (const PolarNodal& pn : states) {
        const PNDeltas d1 = first_order_corrections(pn, kGeo);
        const OracleDeltas o1 = oracle_first_order(pn, kGeo);
        CHECK(d1.dr == doctest::Approx(o1.r).epsilon(1e-12));
        CHECK(d1.dtheta == doctest::Approx(o1.th).epsilon(1e-12));
        CHECK(d1.dnu == doctest::Approx(o1.nu).epsilon(1e-12));
        CHECK(d1.dR == doctest::Approx(o1.R).epsilon(1e-12));
        CHECK(d1.dTheta == doctest::Approx(o1.Th).epsilon(1e-12));

        const SecondOrderInverse d2 = second_order_inverse_corrections(pn, kGeo);
        const OracleDeltas o2 = oracle_second_order(pn, kGeo);
        CHECK(d2.d2r == doctest::Approx(o2.r).epsilon(1e-12));
        CHECK(d2.d2R == doctest::Approx(o2.R).epsilon(1e-12));
        CHECK(d2.d2Theta == doctest::Approx(o2.Th).epsilon(1e-12));
    }
}

TEST_CASE("J2 = 0 makes both directions the identity") {
    GeoModel kepler = kGeo;
    kepler.j2 = 0.0;
    const PolarNodal pn = keplerian_to_polar_nodal(spot4_elements(), kepler);
    const PolarNodal d = apply_direct(pn, kepler);
    const PolarNodal i = apply_inverse(pn, kepler);
    CHECK(d.r == pn.r);
    CHECK(d.theta == pn.theta);
    CHECK(d.Theta == pn.Theta);
    CHECK(i.r == pn.r);
    CHECK(i.nu == pn.nu);
    CHECK(i.Theta == pn.Theta);
}

TEST_CASE("second-order corrections: equatorial J3=J4=0 substitution") {
    GeoModel g = kGeo;
    g.j3 = g.j4 = 0.0;
    Keplerian el;
    el.a = 7000.0;
    el.e = 0.01;
    el.inc = 0.0;
    el.argp = 0.3;
    el.M = 0.9;
    const PolarNodal pn = keplerian_to_polar_nodal(el, g);
    const SecondOrderInverse d2 = second_order_inverse_corrections(pn, g);
    const double p = pn.Theta * pn.Theta / g.mu;
    CHECK(d2.d2r == doctest::Approx(8.0 * p).epsilon(1e-12));   // -3 + 10 + 1
    CHECK(d2.d2Theta == doctest::Approx(0.0).scale(pn.Theta).epsilon(1e-15));
}

TEST_CASE("J-tilde factored terms vanish when J3 = J4 = 0 (coefficient audit)") {
    GeoModel g = kGeo;
    g.j3 = g.j4 = 0.0;
    test::StateGen gen(43);
    for (int i = 0; i < 50; ++i) {
        const PolarNodal pn = gen.polar_nodal(g);
        const SecondOrderInverse d2 = second_order_inverse_corrections(pn, g);
        // Oracle restricted to the pure-J2 rows.
        const OracleDeltas o2 = oracle_second_order(pn, g);
        CHECK(d2.d2r == doctest::Approx(o2.r).epsilon(1e-13));
        CHECK(d2.d2R == doctest::Approx(o2.R).epsilon(1e-13));
        CHECK(d2.d2Theta == doctest::Approx(o2.Th).epsilon(1e-13));

        // The J3/J4 terms really are additive on top of the pure-J2 part.
        const SecondOrderInverse full = second_order_inverse_corrections(pn, kGeo);
        CHECK(std::abs((full.d2r - d2.d2r)) > 0.0);
    }
}

TEST_CASE("inverse then direct is the identity to O(eps^2)") {
    test::StateGen gen(47);
    for (int i = 0; i < 200; ++i) {
        const PolarNodal pn = gen.polar_nodal(kGeo);
        const double eps = aux_quantities(pn, kGeo).eps;
        const PolarNodal back = apply_direct(apply_inverse(pn, kGeo), kGeo);
        const auto res = residual(back, pn);
        for (double r : res) CHECK(r <= 50.0 * eps * eps);
        CHECK(back.N == pn.N);   // N untouched in both directions
    }
}

TEST_CASE("SPOT4 direct correction magnitude is eps * p * O(1)") {
    const PolarNodal pn = keplerian_to_polar_nodal(spot4_elements(), kGeo);
    const AuxQuantities q = aux_quantities(pn, kGeo);
    const PolarNodal osc = apply_direct(pn, kGeo);
    const double dr = std::abs(osc.r - pn.r);
    CHECK(dr > 0.1 * std::abs(q.eps) * q.p);
    CHECK(dr < 10.0 * std::abs(q.eps) * q.p);   // few km for LEO
}

TEST_CASE("delta_energy: vanishing cases and the circular reduction") {
    GeoModel kepler = kGeo;
    kepler.j2 = 0.0;
    const PolarNodal pn0 = keplerian_to_polar_nodal(spot4_elements(), kepler);
    CHECK(delta_energy(pn0, kepler) == 0.0);

    // Circular orbit: rR/Theta = 0 and r = p kill two of the three terms.
    Keplerian el;
    el.a = 7100.0;
    el.e = 0.0;
    el.inc = 1.2;
    el.M = 0.7;
    const PolarNodal circ = keplerian_to_polar_nodal(el, kGeo);
    const AuxQuantities q = aux_quantities(circ, kGeo);
    const SecondOrderInverse d2 = second_order_inverse_corrections(circ, kGeo);
    const double expected = 0.5 * q.eps * q.eps * (circ.Theta / circ.r) * (circ.Theta / circ.r) *
                            d2.d2Theta / circ.Theta;
    CHECK(delta_energy(circ, kGeo) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("delta_energy: the Theta term dominates for SPOT4") {
    const PolarNodal pn = keplerian_to_polar_nodal(spot4_elements(), kGeo);
    const AuxQuantities q = aux_quantities(pn, kGeo);
    const SecondOrderInverse d2 = second_order_inverse_corrections(pn, kGeo);

    const double t_R = std::pow(pn.r * pn.R / pn.Theta, 2) * d2.d2R / (pn.Theta / q.p);
    const double t_Th = d2.d2Theta / pn.Theta;
    const double t_r = (pn.r / q.p - 1.0) * d2.d2r / q.p;
    CHECK(std::abs(t_Th) >= 60.0 * std::abs(t_R));
    CHECK(std::abs(t_Th) >= 60.0 * std::abs(t_r));
}
