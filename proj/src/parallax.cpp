#include "leoprop/parallax.hpp"

#include <cmath>

#include "leoprop/astro.hpp"

namespace leoprop {

PNDeltas first_order_corrections(const PolarNodal& pn, const GeoModel& geo) {
    const AuxQuantities q = aux_quantities(pn, geo);
    const double c2 = q.c * q.c;
    const double s2 = q.s * q.s;
    const double cos2t = std::cos(2.0 * pn.theta);
    const double sin2t = std::sin(2.0 * pn.theta);

    PNDeltas d;
    d.dr = q.p * (1.0 - 1.5 * s2 - 0.5 * s2 * cos2t);
    d.dtheta = (1.0 - 6.0 * c2 + (1.0 - 2.0 * c2) * cos2t) * q.sigma -
               (0.25 - 1.75 * c2 + (1.0 - 3.0 * c2) * q.kappa) * sin2t;
    d.dnu = q.c * ((3.0 + cos2t) * q.sigma - (1.5 + 2.0 * q.kappa) * sin2t);
    d.dR = (pn.Theta / pn.r) * (1.0 + q.kappa) * s2 * sin2t;
    d.dTheta = -pn.Theta * s2 * ((1.5 + 2.0 * q.kappa) * cos2t + q.sigma * sin2t);
    d.dN = 0.0;
    return d;
}

SecondOrderInverse second_order_inverse_corrections(const PolarNodal& pn, const GeoModel& geo) {
    const AuxQuantities q = aux_quantities(pn, geo);
    const double c2 = q.c * q.c;
    const double c4 = c2 * c2;
    const double s2 = q.s * q.s;
    const double s3 = s2 * q.s;
    const double s4 = s2 * s2;
    const double j3t = geo.j3_tilde();
    const double j4t = geo.j4_tilde();
    const double p_over_alpha = q.p / geo.re;

    const double cost = std::cos(pn.theta), sint = std::sin(pn.theta);
    const double cos2t = std::cos(2.0 * pn.theta), sin2t = std::sin(2.0 * pn.theta);
    const double cos3t = std::cos(3.0 * pn.theta), sin3t = std::sin(3.0 * pn.theta);
    const double cos4t = std::cos(4.0 * pn.theta), sin4t = std::sin(4.0 * pn.theta);

    SecondOrderInverse d;

    d.d2r = q.p * (-3.0 + 10.0 * c2 + c4 - (4.0 - 32.0 * c2) * s2 * cos2t - s4 * cos4t -
                   1.5 * p_over_alpha * j3t *
                       ((1.0 - 5.0 * c2) * q.s * sint + (5.0 / 6.0) * s3 * sin3t) -
                   j4t * ((9.0 / 8.0) * (3.0 - 30.0 * c2 + 35.0 * c4) +
                          2.5 * (1.0 - 7.0 * c2) * s2 * cos2t - (7.0 / 8.0) * s4 * cos4t));

    d.d2R = (pn.Theta / q.p) *
            (s2 * (2.0 - 22.0 * c2) * sin2t + s4 * sin4t +
             1.5 * p_over_alpha * j3t * ((1.0 - 5.0 * c2) * q.s * cost - 2.5 * s3 * cos3t) +
             j4t * (5.0 * (1.0 - 7.0 * c2) * s2 * sin2t - 3.5 * s4 * sin4t));

    d.d2Theta =
        pn.Theta *
        (-(0.25 * (7.0 - 25.0 * c2) + 6.0 * (1.0 - 3.0 * c2) * q.kappa) * s2 -
         (1.5 * (1.0 - 9.0 * c2) + (4.0 - 44.0 * c2) * q.kappa) * s2 * cos2t -
         q.sigma * (2.0 - 28.0 * c2) * s2 * sin2t + 0.75 * s4 * cos4t -
         1.5 * q.sigma * s4 * sin4t +
         p_over_alpha * j3t *
             (1.5 * (1.0 - 5.0 * c2) * q.s * (q.sigma * cost + (2.0 + q.kappa) * sint) -
              1.25 * (4.0 + 9.0 * q.kappa) * s3 * sin3t + 3.75 * q.sigma * s3 * cos3t) -
         j4t * (2.5 * (1.0 - 7.0 * c2) * s2 *
                    (2.0 * q.sigma * sin2t + (1.0 + 4.0 * q.kappa) * cos2t) -
                (7.0 / 8.0) * (5.0 + 16.0 * q.kappa) * s4 * cos4t - 3.5 * q.sigma * s4 * sin4t));

    return d;
}

PolarNodal apply_direct(const PolarNodal& prime, const GeoModel& geo) {
    const AuxQuantities q = aux_quantities(prime, geo);
    const PNDeltas d = first_order_corrections(prime, geo);

    PolarNodal out = prime;
    out.r += q.eps * d.dr;
    out.theta += q.eps * d.dtheta;
    out.nu += q.eps * d.dnu;
    out.R += q.eps * d.dR;
    out.Theta += q.eps * d.dTheta;
    return out;
}

PolarNodal apply_inverse(const PolarNodal& oscul, const GeoModel& geo) {
    const AuxQuantities q = aux_quantities(oscul, geo);
    const PNDeltas d = first_order_corrections(oscul, geo);
    const SecondOrderInverse d2 = second_order_inverse_corrections(oscul, geo);
    const double half_eps2 = 0.5 * q.eps * q.eps;

    PolarNodal out = oscul;
    out.r += -q.eps * d.dr + half_eps2 * d2.d2r;
    out.theta += -q.eps * d.dtheta;
    out.nu += -q.eps * d.dnu;
    out.R += -q.eps * d.dR;
    out.Theta += -q.eps * d.dTheta + half_eps2 * d2.d2Theta;
    return out;
}

double delta_energy(const PolarNodal& pn, const GeoModel& geo) {
    const AuxQuantities q = aux_quantities(pn, geo);
    const SecondOrderInverse d2 = second_order_inverse_corrections(pn, geo);
    const double rr_over_theta = pn.r * pn.R / pn.Theta;
    const double t_over_r = pn.Theta / pn.r;
    return 0.5 * q.eps * q.eps * t_over_r * t_over_r *
           (rr_over_theta * rr_over_theta * d2.d2R / (pn.Theta / q.p) + d2.d2Theta / pn.Theta +
            (pn.r / q.p - 1.0) * d2.d2r / q.p);
}

} // namespace leoprop
