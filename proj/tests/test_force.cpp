#include <doctest.h>

#include <cmath>

#include "leoprop/astro.hpp"
#include "leoprop/force.hpp"
#include "leoprop/torsion.hpp"
#include "test_util.hpp"

using namespace leoprop;

namespace {

const GeoModel kGeo{};

// theta-expanded Legendre forms on the orbit plane, sin(phi) = s sin(theta).
double p2_theta_form(double s, double theta) {
    const double s2 = s * s;
    return -0.5 + 0.75 * s2 - 0.75 * s2 * std::cos(2.0 * theta);
}

double p3_theta_form(double s, double theta) {
    const double s2 = s * s;
    return (-1.5 + (15.0 / 8.0) * s2) * s * std::sin(theta) -
           (5.0 / 8.0) * s2 * s * std::sin(3.0 * theta);
}

double p4_theta_form(double s, double theta) {
    const double s2 = s * s;
    const double s4 = s2 * s2;
    return (3.0 / 64.0) * (8.0 - 40.0 * s2 + 35.0 * s4) +
           (5.0 / 16.0) * (6.0 - 7.0 * s2) * s2 * std::cos(2.0 * theta) +
           (35.0 / 64.0) * s4 * std::cos(4.0 * theta);
}

} // namespace

TEST_CASE("legendre_p234 fixed values") {
    const LegendreP234 p0 = legendre_p234(0.0);
    CHECK(p0.p2 == doctest::Approx(-0.5).epsilon(1e-16));
    CHECK(p0.p3 == 0.0);
    CHECK(p0.p4 == doctest::Approx(3.0 / 8.0).epsilon(1e-16));

    const LegendreP234 p1 = legendre_p234(1.0);
    CHECK(p1.p2 == doctest::Approx(1.0).epsilon(1e-16));
    CHECK(p1.p3 == doctest::Approx(1.0).epsilon(1e-16));
    CHECK(p1.p4 == doctest::Approx(1.0).epsilon(1e-16));

    const LegendreP234 ph = legendre_p234(0.5);
    CHECK(ph.p2 == doctest::Approx(-0.125).epsilon(1e-16));
    CHECK(ph.p3 == doctest::Approx(-0.4375).epsilon(1e-16));
    CHECK(ph.p4 == doctest::Approx((35.0 * 0.0625 - 30.0 * 0.25 + 3.0) / 8.0).epsilon(1e-16));
}

TEST_CASE("theta-form Legendre expansions match the sin(phi) form") {
    test::StateGen gen(3);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    std::uniform_real_distribution<double> ut(0.0, kTwoPi);
    for (int i = 0; i < 500; ++i) {
        const double s = us(rng);
        const double theta = ut(rng);
        const LegendreP234 p = legendre_p234(s * std::sin(theta));
        CHECK(std::abs(p.p2 - p2_theta_form(s, theta)) < 1e-14);
        CHECK(std::abs(p.p3 - p3_theta_form(s, theta)) < 1e-14);
        CHECK(std::abs(p.p4 - p4_theta_form(s, theta)) < 1e-14);
    }
}

TEST_CASE("zonal_disturbing: vanishing cases and equatorial closed form") {
    GeoModel kepler = kGeo;
    kepler.j2 = kepler.j3 = kepler.j4 = 0.0;
    const CartesianState state{{7000.0, 0.0, 0.0}, {0.0, 7.5, 0.0}};
    CHECK(zonal_disturbing(state, kepler, ZonalModel::FullZonal) == 0.0);
    CHECK(zonal_disturbing(state, kGeo, ZonalModel::KeplerOnly) == 0.0);

    // Equatorial point: P3 term vanishes, P2 and P4 reduce to -1/2 and 3/8.
    const double r = 7000.0;
    const double q = kGeo.re / r;
    const double expected =
        (kGeo.mu / r) * (q * q * kGeo.j2 * (-0.5) + q * q * q * q * kGeo.j4 * (3.0 / 8.0));
    CHECK(zonal_disturbing(state, kGeo, ZonalModel::FullZonal) ==
          doctest::Approx(expected).epsilon(1e-15));
    CHECK(total_potential(state, kGeo, ZonalModel::FullZonal) ==
          doctest::Approx(-kGeo.mu / r + expected).epsilon(1e-15));
}

TEST_CASE("zonal_disturbing agrees with the theta-form expansion on the orbit plane") {
    test::StateGen gen(17);
    for (int i = 0; i < 100; ++i) {
        const PolarNodal pn = gen.polar_nodal(kGeo);
        const CartesianState cs = polar_nodal_to_cartesian(pn);
        const double s = std::sqrt(1.0 - (pn.N / pn.Theta) * (pn.N / pn.Theta));
        const double q = kGeo.re / pn.r;
        const double expected =
            (kGeo.mu / pn.r) *
            (q * q * kGeo.j2 * p2_theta_form(s, pn.theta) +
             q * q * q * kGeo.j3 * p3_theta_form(s, pn.theta) +
             q * q * q * q * kGeo.j4 * p4_theta_form(s, pn.theta));
        const double got = zonal_disturbing(cs, kGeo, ZonalModel::FullZonal);
        CHECK(std::abs(got - expected) < 1e-14 * std::abs(kGeo.mu / pn.r));
    }
}

TEST_CASE("zonal_acceleration: Kepler term and equatorial symmetry") {
    const CartesianState state{{6800.0, 1200.0, -300.0}, {}};
    const Vec3 acc = zonal_acceleration(state, kGeo, ZonalModel::KeplerOnly);
    const double r = norm(state.position);
    const Vec3 expected = (-kGeo.mu / (r * r * r)) * state.position;
    CHECK(acc.x == doctest::Approx(expected.x).epsilon(1e-15));
    CHECK(acc.y == doctest::Approx(expected.y).epsilon(1e-15));
    CHECK(acc.z == doctest::Approx(expected.z).epsilon(1e-15));

    // Equatorial J2-only: no out-of-plane force by symmetry.
    const CartesianState eq{{7000.0, -2000.0, 0.0}, {}};
    CHECK(zonal_acceleration(eq, kGeo, ZonalModel::J2Only).z == 0.0);
}

TEST_CASE("zonal_acceleration equals -grad(total_potential) (central differences)") {
    test::StateGen gen(23);
    const double h = 1e-4;   // km
    for (int i = 0; i < 100; ++i) {
        const PolarNodal pn = gen.polar_nodal(kGeo);
        const CartesianState cs = polar_nodal_to_cartesian(pn);
        for (ZonalModel kind : {ZonalModel::J2Only, ZonalModel::FullZonal}) {
            const Vec3 acc = zonal_acceleration(cs, kGeo, kind);
            Vec3 fd;
            for (int ax = 0; ax < 3; ++ax) {
                CartesianState plus = cs, minus = cs;
                double* pp = ax == 0 ? &plus.position.x : ax == 1 ? &plus.position.y : &plus.position.z;
                double* pm = ax == 0 ? &minus.position.x : ax == 1 ? &minus.position.y : &minus.position.z;
                *pp += h;
                *pm -= h;
                const double g = (total_potential(plus, kGeo, kind) -
                                  total_potential(minus, kGeo, kind)) /
                                 (2.0 * h);
                (ax == 0 ? fd.x : ax == 1 ? fd.y : fd.z) = -g;
            }
            CHECK(norm(fd - acc) < 1e-7 * norm(acc));
        }
    }
}

TEST_CASE("hamiltonian values") {
    Keplerian el;
    el.a = 7050.0;
    el.e = 0.0;
    el.inc = 1.2;
    const PolarNodal pn = keplerian_to_polar_nodal(el, kGeo);
    CHECK(hamiltonian_polar_nodal(pn, kGeo) ==
          doctest::Approx(-kGeo.mu / (2.0 * el.a)).epsilon(1e-14));

    // Phi^2 = 1 makes both Hamiltonians identical.
    CHECK(hamiltonian_quasi_keplerian(pn, 1.0, kGeo) ==
          doctest::Approx(hamiltonian_polar_nodal(pn, kGeo)).epsilon(1e-16));
}
