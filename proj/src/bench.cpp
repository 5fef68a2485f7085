#include "leoprop/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "leoprop/astro.hpp"
#include "leoprop/comparison.hpp"
#include "leoprop/cowell.hpp"
#include "leoprop/intermediary.hpp"

namespace leoprop {

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_median_s(Fn&& fn, int repeats) {
    fn();   // warm-up, untimed
    std::vector<double> samples;
    samples.reserve(repeats);
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = Clock::now();
        fn();
        const auto t1 = Clock::now();
        samples.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

// Keep the optimizer honest across repeats.
volatile double g_sink = 0.0;

} // namespace

BenchReport run_bench(const Scenario& sc, double output_interval_s, int repeats) {
    if (repeats < 5) throw std::invalid_argument("run_bench: repeats must be >= 5");
    if (!(output_interval_s > 0.0)) {
        throw std::invalid_argument("run_bench: output interval must be > 0");
    }

    const Keplerian el0 = sc.initial_elements();
    const PolarNodal pn0 = keplerian_to_polar_nodal(el0, sc.geo);
    const CartesianState s0 = polar_nodal_to_cartesian(pn0);

    IntegratorConfig cfg;
    cfg.step = 1.0;
    cfg.output_interval = output_interval_s;
    const double tf = sc.duration_s;

    BenchReport rep;
    rep.duration_s = tf;
    rep.output_interval_s = output_interval_s;
    rep.repeats = repeats;

    rep.cowell_j2_wall_s = time_median_s(
        [&] {
            const Ephemeris e = propagate_cowell(s0, 0.0, tf, cfg, sc.geo, ZonalModel::J2Only);
            g_sink = e.states.back().position.x;
        },
        repeats);

    rep.intermediary1_wall_s = time_median_s(
        [&] {
            const IntermediaryPropagator prop(pn0, 0.0, sc.geo, IntermediaryKind::First);
            const PolarNodalEphemeris e = prop.propagate(tf, output_interval_s);
            g_sink = e.states.back().r;
        },
        repeats);

    rep.intermediary2_wall_s = time_median_s(
        [&] {
            const IntermediaryPropagator prop(pn0, 0.0, sc.geo, IntermediaryKind::Second);
            const PolarNodalEphemeris e = prop.propagate(tf, output_interval_s);
            g_sink = e.states.back().r;
        },
        repeats);

    const double n_evals = std::floor(tf / output_interval_s) + 1.0;
    rep.rk4_cost_per_sim_second_s = rep.cowell_j2_wall_s / tf;
    rep.intermediary1_cost_per_eval_s = rep.intermediary1_wall_s / n_evals;
    rep.intermediary2_cost_per_eval_s = rep.intermediary2_wall_s / n_evals;

    rep.speedup_intermediary1 = rep.cowell_j2_wall_s / rep.intermediary1_wall_s;
    rep.speedup_intermediary2 = rep.cowell_j2_wall_s / rep.intermediary2_wall_s;

    // Interval at which n_evals * eval cost equals the fixed RK4 cost.
    rep.break_even_interval1_s = rep.intermediary1_cost_per_eval_s / rep.rk4_cost_per_sim_second_s;
    rep.break_even_interval2_s = rep.intermediary2_cost_per_eval_s / rep.rk4_cost_per_sim_second_s;
    return rep;
}

void print_report(const BenchReport& r, std::ostream& out) {
    out << "benchmark: " << r.duration_s << " s propagation, output every "
        << r.output_interval_s << " s, median of " << r.repeats << " runs\n";
    out << "  cowell-j2 (RK4, 1 s step): " << r.cowell_j2_wall_s * 1e3 << " ms  ("
        << r.rk4_cost_per_sim_second_s * 1e6 << " us per simulated second)\n";
    out << "  intermediary-1:            " << r.intermediary1_wall_s * 1e3 << " ms  ("
        << r.intermediary1_cost_per_eval_s * 1e6 << " us per evaluation)\n";
    out << "  intermediary-2:            " << r.intermediary2_wall_s * 1e3 << " ms  ("
        << r.intermediary2_cost_per_eval_s * 1e6 << " us per evaluation)\n";
    out << "  speedup intermediary-1 vs cowell-j2: " << r.speedup_intermediary1 << "x\n";
    out << "  speedup intermediary-2 vs cowell-j2: " << r.speedup_intermediary2 << "x\n";
    out << "  break-even output interval: " << r.break_even_interval1_s << " s (first), "
        << r.break_even_interval2_s << " s (second)\n";
}

} // namespace leoprop
