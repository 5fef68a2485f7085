#include "leoprop/comparison.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "leoprop/astro.hpp"

namespace leoprop {

std::string method_name(Method m) {
    switch (m) {
        case Method::CowellJ2: return "cowell-j2";
        case Method::CowellFull: return "cowell-full";
        case Method::Intermediary1: return "intermediary-1";
        case Method::Intermediary2: return "intermediary-2";
    }
    throw std::logic_error("method_name: bad enum");
}

Method parse_method(const std::string& name) {
    if (name == "cowell-j2") return Method::CowellJ2;
    if (name == "cowell-full") return Method::CowellFull;
    if (name == "intermediary-1") return Method::Intermediary1;
    if (name == "intermediary-2") return Method::Intermediary2;
    throw std::runtime_error("unknown method '" + name +
                             "' (expected cowell-j2, cowell-full, intermediary-1 or "
                             "intermediary-2)");
}

Ephemeris propagate_method(const Scenario& sc, Method m) {
    const Keplerian el0 = sc.initial_elements();
    IntegratorConfig cfg;
    cfg.output_interval = sc.output_interval_s;

    switch (m) {
        case Method::CowellJ2:
        case Method::CowellFull: {
            const CartesianState s0 =
                polar_nodal_to_cartesian(keplerian_to_polar_nodal(el0, sc.geo));
            const ZonalModel kind =
                (m == Method::CowellJ2) ? ZonalModel::J2Only : ZonalModel::FullZonal;
            return propagate_cowell(s0, 0.0, sc.duration_s, cfg, sc.geo, kind);
        }
        case Method::Intermediary1:
        case Method::Intermediary2: {
            const PolarNodal pn0 = keplerian_to_polar_nodal(el0, sc.geo);
            const IntermediaryKind kind = (m == Method::Intermediary1)
                                              ? IntermediaryKind::First
                                              : IntermediaryKind::Second;
            const IntermediaryPropagator prop(pn0, 0.0, sc.geo, kind);
            return prop.propagate(sc.duration_s, sc.output_interval_s).to_cartesian();
        }
    }
    throw std::logic_error("propagate_method: bad enum");
}

std::vector<Keplerian> element_series(const Ephemeris& eph, const GeoModel& geo) {
    std::vector<Keplerian> out;
    out.reserve(eph.states.size());
    for (const CartesianState& s : eph.states) {
        out.push_back(polar_nodal_to_keplerian(cartesian_to_polar_nodal(s), geo));
    }
    return out;
}

ErrorSeries error_series(const std::vector<double>& epochs,
                         const std::vector<Keplerian>& method,
                         const std::vector<Keplerian>& reference) {
    if (method.size() != reference.size() || method.size() != epochs.size()) {
        throw std::invalid_argument("error_series: length mismatch");
    }
    ErrorSeries es;
    es.epochs = epochs;
    const std::size_t n = method.size();
    es.da.reserve(n);
    es.dI.reserve(n);
    es.draan.reserve(n);
    es.dF.reserve(n);
    es.dC.reserve(n);
    es.dS.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Equinoctial m = equinoctial_of(method[i]);
        const Equinoctial r = equinoctial_of(reference[i]);
        es.da.push_back(method[i].a - reference[i].a);
        es.dI.push_back(wrap_pi(method[i].inc - reference[i].inc));
        es.draan.push_back(wrap_pi(method[i].raan - reference[i].raan));
        es.dF.push_back(wrap_pi(m.F - r.F));
        es.dC.push_back(m.C - r.C);
        es.dS.push_back(m.S - r.S);
    }
    return es;
}

std::map<Method, ErrorSeries> run_comparison(const Scenario& sc,
                                             const std::vector<Method>& methods) {
    const Keplerian el0 = sc.initial_elements();
    const CartesianState s0 = polar_nodal_to_cartesian(keplerian_to_polar_nodal(el0, sc.geo));

    IntegratorConfig ref_cfg;
    ref_cfg.tolerance = 1e-13;
    ref_cfg.output_interval = sc.output_interval_s;
    const Ephemeris ref =
        reference_propagate(s0, 0.0, sc.duration_s, ref_cfg, sc.geo, ZonalModel::FullZonal);
    const std::vector<Keplerian> ref_els = element_series(ref, sc.geo);

    std::map<Method, ErrorSeries> out;
    for (Method m : methods) {
        const Ephemeris eph = propagate_method(sc, m);
        if (eph.epochs.size() != ref.epochs.size()) {
            throw std::runtime_error("run_comparison: grid mismatch for " + method_name(m));
        }
        out.emplace(m, error_series(ref.epochs, element_series(eph, sc.geo), ref_els));
    }
    return out;
}

namespace {

// Full-precision decimal: doubles re-parse bitwise from %.17g.
void put(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

} // namespace

void emit_error_csv(const ErrorSeries& series, std::ostream& out) {
    out << "t_s,da_km,dI_deg,dOmega_deg,dF_deg,dC,dS\n";
    for (std::size_t i = 0; i < series.epochs.size(); ++i) {
        put(out, series.epochs[i]);
        out << ',';
        put(out, series.da[i]);
        out << ',';
        put(out, rad2deg(series.dI[i]));
        out << ',';
        put(out, rad2deg(series.draan[i]));
        out << ',';
        put(out, rad2deg(series.dF[i]));
        out << ',';
        put(out, series.dC[i]);
        out << ',';
        put(out, series.dS[i]);
        out << '\n';
    }
}

void emit_error_csv(const ErrorSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    emit_error_csv(series, out);
    if (!out) throw std::runtime_error("write failure: " + path);
}

void emit_ephemeris_csv(const Ephemeris& eph, std::ostream& out) {
    out << "t_s,x_km,y_km,z_km,vx_kms,vy_kms,vz_kms\n";
    for (std::size_t i = 0; i < eph.epochs.size(); ++i) {
        const CartesianState& s = eph.states[i];
        put(out, eph.epochs[i]);
        for (double v : {s.position.x, s.position.y, s.position.z, s.velocity.x, s.velocity.y,
                         s.velocity.z}) {
            out << ',';
            put(out, v);
        }
        out << '\n';
    }
}

void emit_ephemeris_csv(const Ephemeris& eph, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    emit_ephemeris_csv(eph, out);
    if (!out) throw std::runtime_error("write failure: " + path);
}

} // namespace leoprop
