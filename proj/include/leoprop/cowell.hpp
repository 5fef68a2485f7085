#pragma once

#include <stdexcept>
#include <vector>

#include "leoprop/force.hpp"
#include "leoprop/states.hpp"

namespace leoprop {

/// Time-tagged Cartesian trajectory. Epochs are seconds past the initial time.
struct Ephemeris {
    std::vector<double> epochs;
    std::vector<CartesianState> states;
};

struct IntegratorConfig {
    double step = 1.0;              // fixed RK4 internal step [s]
    double tolerance = 1e-12;       // adaptive reference local tolerance
    double output_interval = 240.0; // recording interval [s]
};

/**
 * @brief One classical RK4 step of the Cowell equations.
 *
 * accel must map position -> acceleration. Throws if the update is not finite.
 */
template <class AccelFn>
CartesianState rk4_step(const CartesianState& y, double h, AccelFn&& accel) {
    const Vec3 k1v = accel(y.position);
    const Vec3 k1r = y.velocity;

    const Vec3 k2v = accel(y.position + 0.5 * h * k1r);
    const Vec3 k2r = y.velocity + 0.5 * h * k1v;

    const Vec3 k3v = accel(y.position + 0.5 * h * k2r);
    const Vec3 k3r = y.velocity + 0.5 * h * k2v;

    const Vec3 k4v = accel(y.position + h * k3r);
    const Vec3 k4r = y.velocity + h * k3v;

    CartesianState out;
    out.position = y.position + (h / 6.0) * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
    out.velocity = y.velocity + (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (!std::isfinite(out.position.x + out.position.y + out.position.z +
                       out.velocity.x + out.velocity.y + out.velocity.z)) {
        throw std::runtime_error("rk4_step: non-finite state update");
    }
    return out;
}

/**
 * @brief Fixed-step RK4 Cowell propagation sampled every cfg.output_interval.
 *
 * Integration advances at cfg.step inside each output interval; when the step
 * does not divide the interval the last substep is shortened to land exactly
 * on the output epoch.
 */
Ephemeris propagate_cowell(const CartesianState& state0, double t0, double tf,
                           const IntegratorConfig& cfg, const GeoModel& geo, ZonalModel kind);

/**
 * @brief Adaptive Dormand-Prince 5(4) reference trajectory (truth oracle).
 *
 * Interior output epochs are produced by the pair's dense output; the final
 * epoch is hit by an exact step. Deterministic: identical inputs give
 * bitwise-identical output.
 */
Ephemeris reference_propagate(const CartesianState& state0, double t0, double tf,
                              const IntegratorConfig& cfg, const GeoModel& geo, ZonalModel kind);

} // namespace leoprop
