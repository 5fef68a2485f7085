#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leoprop/bench.hpp"
#include "leoprop/comparison.hpp"
#include "leoprop/scenario.hpp"

namespace {

leoprop::Scenario make_scenario(const std::string& scenario_arg, double duration,
                                double interval) {
    leoprop::Scenario sc = leoprop::resolve_scenario(scenario_arg);
    if (duration > 0.0) sc.duration_s = duration;
    if (interval > 0.0) sc.output_interval_s = interval;
    leoprop::apply_env_overrides(sc.geo);
    return sc;
}

std::vector<leoprop::Method> parse_methods(const std::string& csv) {
    std::vector<leoprop::Method> methods;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string tok =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) methods.push_back(leoprop::parse_method(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (methods.empty()) throw std::runtime_error("no methods given");
    return methods;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"LEO zonal-gravity propagation and benchmarking"};
    app.require_subcommand(1);

    std::string scenario_arg;
    double duration = 0.0;
    double interval = 0.0;

    // propagate
    auto* cmd_prop = app.add_subcommand("propagate", "propagate one method, write ephemeris CSV");
    std::string method_arg, out_path;
    cmd_prop->add_option("--scenario", scenario_arg, "built-in name or scenario file")->required();
    cmd_prop->add_option("--method", method_arg,
                         "cowell-j2 | cowell-full | intermediary-1 | intermediary-2")
        ->required();
    cmd_prop->add_option("--duration", duration, "propagation span [s]");
    cmd_prop->add_option("--interval", interval, "output interval [s]");
    cmd_prop->add_option("--out", out_path, "output CSV path")->required();

    // compare
    auto* cmd_cmp = app.add_subcommand(
        "compare", "error series of each method against the full-zonal reference");
    std::string methods_arg, out_dir;
    cmd_cmp->add_option("--scenario", scenario_arg, "built-in name or scenario file")->required();
    cmd_cmp->add_option("--methods", methods_arg, "comma-separated method list")->required();
    cmd_cmp->add_option("--duration", duration, "propagation span [s]");
    cmd_cmp->add_option("--interval", interval, "output interval [s]");
    cmd_cmp->add_option("--out-dir", out_dir, "directory for per-method error CSVs")->required();

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "runtime comparison against the RK4 baseline");
    int repeats = 5;
    cmd_bench->add_option("--scenario", scenario_arg, "built-in name or scenario file")
        ->required();
    cmd_bench->add_option("--duration", duration, "propagation span [s]");
    cmd_bench->add_option("--interval", interval, "output interval [s] (default 240)");
    cmd_bench->add_option("--repeats", repeats, "timing repeats (median reported)")
        ->check(CLI::Range(5, 1000));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_prop) {
            const leoprop::Scenario sc = make_scenario(scenario_arg, duration, interval);
            const leoprop::Ephemeris eph =
                leoprop::propagate_method(sc, leoprop::parse_method(method_arg));
            leoprop::emit_ephemeris_csv(eph, out_path);
            std::cout << eph.epochs.size() << " states written to " << out_path << "\n";
        } else if (*cmd_cmp) {
            const leoprop::Scenario sc = make_scenario(scenario_arg, duration, interval);
            const auto methods = parse_methods(methods_arg);
            const auto results = leoprop::run_comparison(sc, methods);
            std::filesystem::create_directories(out_dir);
            for (const auto& [m, series] : results) {
                const std::string path =
                    (std::filesystem::path(out_dir) / (sc.name + "_" + leoprop::method_name(m) +
                                                       "_errors.csv"))
                        .string();
                leoprop::emit_error_csv(series, path);
                std::cout << leoprop::method_name(m) << " -> " << path << "\n";
            }
        } else if (*cmd_bench) {
            leoprop::Scenario sc = make_scenario(scenario_arg, duration, 0.0);
            const double out_interval = interval > 0.0 ? interval : 240.0;
            const leoprop::BenchReport rep = leoprop::run_bench(sc, out_interval, repeats);
            leoprop::print_report(rep, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
