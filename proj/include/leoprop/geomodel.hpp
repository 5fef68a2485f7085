#pragma once

namespace leoprop {

/**
 * @brief Zonal gravity field constants (km, s units).
 *
 * Defaults are the usual unnormalized earth values; every field can be
 * overridden (scenario files and environment variables at the CLI level).
 */
struct GeoModel {
    double mu = 398600.4415;      // gravitational parameter [km^3/s^2]
    double re = 6378.1363;        // equatorial radius [km]
    double j2 = 1.08262617e-3;
    double j3 = -2.53241052e-6;
    double j4 = -1.61989760e-6;

    // J3/J2^2 and J4/J2^2 are order one for the earth and scale the second
    // order terms of the analytical solution. With J2 = 0 the theory collapses
    // to pure Kepler motion, so they are defined as 0 in that case.
    double j3_tilde() const { return j2 != 0.0 ? j3 / (j2 * j2) : 0.0; }
    double j4_tilde() const { return j2 != 0.0 ? j4 / (j2 * j2) : 0.0; }

    /// Short-period small parameter eps = -(1/2)(re/p)^2 J2 for conic parameter p.
    double eps(double p) const {
        const double q = re / p;
        return -0.5 * q * q * j2;
    }

    /// Long-period small parameter eps3 = (1/2)(J3/J2)(re/p); 0 when J2 = 0.
    double eps3(double p) const { return j2 != 0.0 ? 0.5 * (j3 / j2) * (re / p) : 0.0; }
};

} // namespace leoprop
