#pragma once

#include <iosfwd>

#include "leoprop/scenario.hpp"

namespace leoprop {

/// Median wall times of the J2 Cowell baseline and the two intermediaries over
/// the same output grid, with derived per-evaluation costs, speedups and the
/// break-even output interval. File I/O is excluded from the timed region.
struct BenchReport {
    double duration_s = 0.0;
    double output_interval_s = 0.0;
    int repeats = 0;

    double cowell_j2_wall_s = 0.0;
    double intermediary1_wall_s = 0.0;
    double intermediary2_wall_s = 0.0;

    double rk4_cost_per_sim_second_s = 0.0;
    double intermediary1_cost_per_eval_s = 0.0;
    double intermediary2_cost_per_eval_s = 0.0;

    double speedup_intermediary1 = 0.0;
    double speedup_intermediary2 = 0.0;

    /// Output interval at which the analytical evaluation costs the same as
    /// the 1 s RK4 integration.
    double break_even_interval1_s = 0.0;
    double break_even_interval2_s = 0.0;
};

/// Warm up, then time each method `repeats` times (>= 5) and report medians.
BenchReport run_bench(const Scenario& sc, double output_interval_s, int repeats = 5);

void print_report(const BenchReport& report, std::ostream& out);

} // namespace leoprop
