#pragma once

#include "leoprop/vec3.hpp"

namespace leoprop {

/// Classical (Keplerian) orbital elements. Angles in radians, lengths in km.
struct Keplerian {
    double a = 0.0;      // semi-major axis [km]
    double e = 0.0;      // eccentricity
    double inc = 0.0;    // inclination [rad]
    double raan = 0.0;   // right ascension of the ascending node [rad]
    double argp = 0.0;   // argument of perigee [rad]
    double M = 0.0;      // mean anomaly [rad]
};

/// Delaunay canonical set (l, g, h, L, G, H).
struct DelaunayVars {
    double l = 0.0;   // mean anomaly [rad]
    double g = 0.0;   // argument of perigee [rad]
    double h = 0.0;   // node [rad]
    double L = 0.0;   // sqrt(mu a) [km^2/s]
    double G = 0.0;   // angular momentum [km^2/s]
    double H = 0.0;   // polar component of G [km^2/s]
};

/**
 * @brief Polar-nodal (Whittaker) canonical variables.
 *
 * r: radial distance [km], theta: argument of latitude [rad], nu: node [rad],
 * R: radial velocity [km/s], Theta: total angular momentum [km^2/s],
 * N: polar component of the angular momentum [km^2/s].
 */
struct PolarNodal {
    double r = 0.0;
    double theta = 0.0;
    double nu = 0.0;
    double R = 0.0;
    double Theta = 0.0;
    double N = 0.0;
};

struct CartesianState {
    Vec3 position;   // [km]
    Vec3 velocity;   // [km/s]
};

/// Derived quantities shared by the transformation formulas.
struct AuxQuantities {
    double p = 0.0;       // conic parameter Theta^2/mu [km]
    double eta = 0.0;     // sqrt(1 - e^2)
    double e = 0.0;       // eccentricity, sqrt(kappa^2 + sigma^2)
    double c = 0.0;       // cos(inclination) = N/Theta
    double s = 0.0;       // sin(inclination), s >= 0
    double kappa = 0.0;   // p/r - 1  (= e cos f)
    double sigma = 0.0;   // p R/Theta (= e sin f)
    double eps = 0.0;     // -(1/2)(re/p)^2 J2
    double eps3 = 0.0;    // (1/2)(J3/J2)(re/p)
};

/// Nonsingular fast angle and eccentricity-vector components for low-e error
/// reporting: F = M + argp, C = e cos(argp), S = e sin(argp).
struct Equinoctial {
    double F = 0.0;
    double C = 0.0;
    double S = 0.0;
};

} // namespace leoprop
