#include "leoprop/cowell.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace leoprop {

namespace {

struct State6 {
    std::array<double, 6> y;
};

State6 pack(const CartesianState& s) {
    return {{s.position.x, s.position.y, s.position.z, s.velocity.x, s.velocity.y, s.velocity.z}};
}

CartesianState unpack(const State6& s) {
    return {{s.y[0], s.y[1], s.y[2]}, {s.y[3], s.y[4], s.y[5]}};
}

} // namespace

Ephemeris propagate_cowell(const CartesianState& state0, double t0, double tf,
                           const IntegratorConfig& cfg, const GeoModel& geo, ZonalModel kind) {
    if (!(tf > t0)) throw std::invalid_argument("propagate_cowell: tf must exceed t0");
    if (!(cfg.step > 0.0)) throw std::invalid_argument("propagate_cowell: step must be > 0");
    if (!(cfg.output_interval > 0.0)) {
        throw std::invalid_argument("propagate_cowell: output interval must be > 0");
    }

    const auto accel = [&](const Vec3& pos) {
        return zonal_acceleration({pos, {}}, geo, kind);
    };

    const double span = tf - t0;
    const std::size_t n_out = static_cast<std::size_t>(std::floor(span / cfg.output_interval + 1e-9)) + 1;

    Ephemeris eph;
    eph.epochs.reserve(n_out);
    eph.states.reserve(n_out);
    eph.epochs.push_back(0.0);
    eph.states.push_back(state0);

    CartesianState y = state0;
    double t = 0.0;
    for (std::size_t k = 1; k < n_out; ++k) {
        const double t_next = static_cast<double>(k) * cfg.output_interval;
        // Full steps inside the interval, then a shortened last substep so the
        // sample lands exactly on the output epoch.
        while (t_next - t > cfg.step * (1.0 + 1e-12)) {
            y = rk4_step(y, cfg.step, accel);
            t += cfg.step;
        }
        const double h_last = t_next - t;
        if (h_last > 0.0) {
            y = rk4_step(y, h_last, accel);
        }
        t = t_next;
        eph.epochs.push_back(t);
        eph.states.push_back(y);
    }
    return eph;
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// Error weights b5th - b4th.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Dense-output weights.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

struct DenseCoeffs {
    std::array<double, 6> r1, r2, r3, r4, r5;
};

} // namespace

Ephemeris reference_propagate(const CartesianState& state0, double t0, double tf,
                              const IntegratorConfig& cfg, const GeoModel& geo, ZonalModel kind) {
    if (!(tf > t0)) throw std::invalid_argument("reference_propagate: tf must exceed t0");
    if (!(cfg.tolerance > 1e-15 && cfg.tolerance < 1e-6)) {
        throw std::invalid_argument("reference_propagate: tolerance outside (1e-15, 1e-6)");
    }
    if (!(cfg.output_interval > 0.0)) {
        throw std::invalid_argument("reference_propagate: output interval must be > 0");
    }

    const auto deriv = [&](const State6& s) -> State6 {
        const CartesianState cs = unpack(s);
        const Vec3 acc = zonal_acceleration(cs, geo, kind);
        return {{cs.velocity.x, cs.velocity.y, cs.velocity.z, acc.x, acc.y, acc.z}};
    };

    // Error scale per component: positions against the initial radius,
    // velocities against the initial speed (both tolerance-relative).
    const double r_scale = std::max(norm(state0.position), 1.0);
    const double v_scale = std::max(norm(state0.velocity), 1e-3);
    const std::array<double, 6> scale = {r_scale, r_scale, r_scale, v_scale, v_scale, v_scale};

    const double span = tf - t0;
    const std::size_t n_out = static_cast<std::size_t>(std::floor(span / cfg.output_interval + 1e-9)) + 1;

    Ephemeris eph;
    eph.epochs.reserve(n_out);
    eph.states.reserve(n_out);
    eph.epochs.push_back(0.0);
    eph.states.push_back(state0);
    std::size_t next_out = 1;

    State6 y = pack(state0);
    State6 k1 = deriv(y);
    double t = 0.0;
    double h = 10.0 * std::cbrt(cfg.tolerance / 1e-12);   // deterministic starting guess
    h = std::clamp(h, 1e-3, span);

    constexpr double safety = 0.9;
    constexpr double min_factor = 0.2;
    constexpr double max_factor = 5.0;

    while (t < span && next_out < n_out) {
        if (t + h > span) h = span - t;
        if (!(h > 1e-12)) throw std::runtime_error("reference_propagate: step underflow");

        State6 k2, k3, k4, k5, k6, k7, y5;
        State6 tmp;
        for (int i = 0; i < 6; ++i) tmp.y[i] = y.y[i] + h * a21 * k1.y[i];
        k2 = deriv(tmp);
        for (int i = 0; i < 6; ++i) tmp.y[i] = y.y[i] + h * (a31 * k1.y[i] + a32 * k2.y[i]);
        k3 = deriv(tmp);
        for (int i = 0; i < 6; ++i) {
            tmp.y[i] = y.y[i] + h * (a41 * k1.y[i] + a42 * k2.y[i] + a43 * k3.y[i]);
        }
        k4 = deriv(tmp);
        for (int i = 0; i < 6; ++i) {
            tmp.y[i] = y.y[i] + h * (a51 * k1.y[i] + a52 * k2.y[i] + a53 * k3.y[i] + a54 * k4.y[i]);
        }
        k5 = deriv(tmp);
        for (int i = 0; i < 6; ++i) {
            tmp.y[i] = y.y[i] + h * (a61 * k1.y[i] + a62 * k2.y[i] + a63 * k3.y[i] +
                                     a64 * k4.y[i] + a65 * k5.y[i]);
        }
        k6 = deriv(tmp);
        for (int i = 0; i < 6; ++i) {
            y5.y[i] = y.y[i] + h * (b1 * k1.y[i] + b3 * k3.y[i] + b4 * k4.y[i] +
                                    b5 * k5.y[i] + b6 * k6.y[i]);
        }
        k7 = deriv(y5);   // FSAL

        double err = 0.0;
        for (int i = 0; i < 6; ++i) {
            const double ei = h * (e1 * k1.y[i] + e3 * k3.y[i] + e4 * k4.y[i] + e5 * k5.y[i] +
                                   e6 * k6.y[i] + e7 * k7.y[i]);
            const double w = ei / (cfg.tolerance * scale[i]);
            err += w * w;
        }
        err = std::sqrt(err / 6.0);

        if (err <= 1.0) {
            // Accepted: serve dense output for epochs inside (t, t+h].
            DenseCoeffs dc;
            for (int i = 0; i < 6; ++i) {
                const double ydiff = y5.y[i] - y.y[i];
                const double bspl = h * k1.y[i] - ydiff;
                dc.r1[i] = y.y[i];
                dc.r2[i] = ydiff;
                dc.r3[i] = bspl;
                dc.r4[i] = ydiff - h * k7.y[i] - bspl;
                dc.r5[i] = h * (d1 * k1.y[i] + d3 * k3.y[i] + d4 * k4.y[i] + d5 * k5.y[i] +
                                d6 * k6.y[i] + d7 * k7.y[i]);
            }
            const double t_new = t + h;
            while (next_out < n_out) {
                const double t_out = static_cast<double>(next_out) * cfg.output_interval;
                if (t_out > t_new + 1e-9) break;
                State6 s;
                if (t_out >= t_new - 1e-9) {
                    s = y5;   // on-step sample, no interpolation
                } else {
                    const double th = (t_out - t) / h;
                    const double th1 = 1.0 - th;
                    for (int i = 0; i < 6; ++i) {
                        s.y[i] = dc.r1[i] +
                                 th * (dc.r2[i] + th1 * (dc.r3[i] + th * (dc.r4[i] + th1 * dc.r5[i])));
                    }
                }
                eph.epochs.push_back(t_out);
                eph.states.push_back(unpack(s));
                ++next_out;
            }
            t = t_new;
            y = y5;
            k1 = k7;
        }

        const double factor = (err > 0.0)
                                  ? std::clamp(safety * std::pow(err, -0.2), min_factor, max_factor)
                                  : max_factor;
        h *= factor;
    }
    return eph;
}

} // namespace leoprop
