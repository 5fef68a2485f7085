#pragma once

#include <vector>

#include "leoprop/cowell.hpp"
#include "leoprop/geomodel.hpp"
#include "leoprop/states.hpp"

namespace leoprop {

/// First: parallax elimination + torsion. Second: adds the perigee-elimination
/// long-period corrections on both legs.
enum class IntermediaryKind {
    First,
    Second,
};

struct IntermediaryOptions {
    /// Use the full Delaunay-based inverse long-period set instead of the
    /// simplified one (protects the semi-major axis exactly, costs more).
    bool full_delaunay_inverse = false;
    /// Above this eccentricity a warning is logged (inputs are still accepted).
    double ecc_warn_threshold = 0.1;
};

/// Constants of the pure Kepler system in the tilde chart, frozen at epoch.
struct KeplerianConstants {
    double a = 0.0;
    double e = 0.0;
    double inc = 0.0;
    double raan = 0.0;
    double argp = 0.0;
    double M0 = 0.0;
    double n = 0.0;   // mean motion sqrt(mu/a^3) [rad/s]
};

/// Polar-nodal trajectory; epochs are seconds past t0. N is constant by the
/// axial symmetry of the model.
struct PolarNodalEphemeris {
    std::vector<double> epochs;
    std::vector<PolarNodal> states;

    Ephemeris to_cartesian() const;
};

/**
 * @brief Analytical intermediary propagator.
 *
 * Construction performs the initialization pipeline: parallax inverse (first
 * order with minus sign plus the second-order r and Theta corrections), the
 * inverse long-period corrections for the second kind, and the forward torsion,
 * freezing the tilde-chart Keplerian constants. Evaluation is a pure function
 * of (state, t): one Kepler solve, the backward torsion, the direct long-period
 * corrections for the second kind, and the first-order direct parallax map.
 *
 * Instances are immutable after construction; concurrent evaluate_at calls on
 * distinct epochs are safe.
 */
class IntermediaryPropagator {
  public:
    IntermediaryPropagator(const PolarNodal& pn0, double t0, const GeoModel& geo,
                           IntermediaryKind kind, IntermediaryOptions options = {});

    /// Osculating polar-nodal state at epoch t [s].
    PolarNodal evaluate_at(double t) const;

    /// Uniform grid t0..tf with spacing dt, inclusive of both endpoints
    /// (floor((tf-t0)/dt)+1 points).
    PolarNodalEphemeris propagate(double tf, double dt) const;

    /// Grid defined by a step count: n_steps+1 points spanning [t0, tf].
    PolarNodalEphemeris propagate_steps(double tf, int n_steps) const;

    const KeplerianConstants& constants() const { return constants_; }
    IntermediaryKind kind() const { return kind_; }
    double epoch() const { return t0_; }
    double polar_angular_momentum() const { return n0_; }

  private:
    GeoModel geo_;
    IntermediaryKind kind_;
    IntermediaryOptions options_;
    KeplerianConstants constants_;
    double t0_ = 0.0;
    double n0_ = 0.0;   // N, constant along the flow
};

} // namespace leoprop
