#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "herbidyn/bifurcation_scan.hpp"
#include "herbidyn/csv.hpp"
#include "herbidyn/equilibrium_analysis.hpp"
#include "herbidyn/errors.hpp"
#include "herbidyn/stochastic_bursting.hpp"
#include "herbidyn/version.hpp"
#include "json.hpp"

namespace herbidyn::cli {

namespace {

Range parse_range(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos)
        throw DomainError("range must be start:stop:step, got: " + text);
    try {
        return {std::stod(text.substr(0, first)),
                std::stod(text.substr(first + 1, second - first - 1)),
                std::stod(text.substr(second + 1))};
    } catch (const std::exception&) {
        throw DomainError("range must be numeric start:stop:step, got: " +
                          text);
    }
}

int default_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

NoiseUpdate scheme_from_string(const std::string& s) {
    if (s == "additive") return NoiseUpdate::Additive;
    if (s == "as-printed") return NoiseUpdate::AsPrinted;
    throw DomainError("unknown noise scheme: " + s);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DomainError("cannot open for writing: " + out_path);
    out << text << '\n';
}

struct SpecArgs {
    std::string variant = "II";
    std::string model = "bh";
    double r = 0.0;
    double a = 0.0;

    // Adds --variant/--model; point specs also take scalar --r/--a, while
    // curve and grid subcommands define their own range options.
    void attach(CLI::App* cmd, bool point_spec = true) {
        cmd->add_option("--variant", variant, "Map variant (I or II)")
            ->check(CLI::IsMember({"I", "II"}))
            ->capture_default_str();
        cmd->add_option("--model", model, "Growth model family")
            ->check(CLI::IsMember({"bh", "holling3", "ricker", "logistic"}))
            ->capture_default_str();
        if (point_spec) {
            cmd->add_option("--r", r, "Growth parameter r")->required();
            cmd->add_option("--a", a, "Attack rate a")->required();
        }
    }

    SystemSpec make() const {
        return {variant_from_string(variant), model_from_family(model, r),
                a};
    }
};

std::string thresholds_json(const SystemSpec& spec, double r) {
    const ThresholdReport th = thresholds(spec);
    nlohmann::ordered_json j;
    j["variant"] = to_string(spec.variant());
    j["model"] = spec.model().name();
    j["r"] = r;
    j["a"] = spec.a();
    j["a_crit_transcritical"] =
        std::isfinite(th.a_crit_transcritical)
            ? nlohmann::ordered_json(th.a_crit_transcritical)
            : nlohmann::ordered_json("inf");
    j["extinction"] = th.extinction_predicate;
    j["persistence"] = th.persistence_predicate;
    j["interior_exists"] = th.interior_exists;
    j["marginal"] = th.marginal;
    return j.dump(2);
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Plant-herbivore map toolkit: equilibria, bifurcation "
                 "curves, attractor scans, and noisy bursting"};
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config", "", "Flat key=value config file");
    app.require_subcommand(1);
    // Global flags may trail the subcommand: `reproduce table2 --seed 42`.
    app.fallthrough();

    int threads = default_threads();
    app.add_option("--threads", threads, "Worker threads for sweeps")
        ->capture_default_str();
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "RNG seed")
        ->envname("HERBIDYN_SEED")
        ->capture_default_str();

    // simulate
    auto* c_sim = app.add_subcommand("simulate",
                                     "Iterate the map and write t,P,H");
    SpecArgs sim_spec;
    sim_spec.attach(c_sim);
    double p0 = -1.0, h0 = -1.0;
    long gens = 0, stride = 1;
    std::string sim_out;
    c_sim->add_option("--p0", p0, "Initial plant density");
    c_sim->add_option("--h0", h0, "Initial herbivore density");
    c_sim->add_option("--gens", gens, "Generations to iterate")->required();
    c_sim->add_option("--stride", stride, "Keep every stride-th state")
        ->capture_default_str();
    c_sim->add_option("--out", sim_out, "Output CSV path")->required();

    // equilibria
    auto* c_eq = app.add_subcommand("equilibria",
                                    "Report all equilibria as JSON");
    SpecArgs eq_spec;
    eq_spec.attach(c_eq);
    std::string eq_out;
    c_eq->add_option("--out", eq_out, "Output path (default stdout)");

    // thresholds
    auto* c_th = app.add_subcommand("thresholds",
                                    "Report threshold predicates as JSON");
    SpecArgs th_spec;
    th_spec.attach(c_th);
    std::string th_out;
    c_th->add_option("--out", th_out, "Output path (default stdout)");

    // ns-curve
    auto* c_ns = app.add_subcommand("ns-curve",
                                    "Trace the Neimark-Sacker curve in a");
    SpecArgs ns_spec;
    ns_spec.attach(c_ns, false);
    std::string ns_range, ns_out;
    c_ns->add_option("--r", ns_range, "r grid start:stop:step")->required();
    c_ns->add_option("--out", ns_out, "Output CSV path")->required();

    // collapse-curve
    auto* c_col = app.add_subcommand(
        "collapse-curve", "Trace the collapse/heteroclinic curve in a");
    SpecArgs col_spec;
    col_spec.attach(c_col, false);
    std::string col_range, col_out, col_policy = "auto";
    c_col->add_option("--r", col_range, "r grid start:stop:step")
        ->required();
    c_col->add_option("--policy", col_policy,
                      "floor (herbivore rounds to zero) or origin "
                      "(everything captured); auto picks by family")
        ->check(CLI::IsMember({"auto", "floor", "origin"}))
        ->capture_default_str();
    c_col->add_option("--out", col_out, "Output CSV path")->required();

    // scan
    auto* c_scan = app.add_subcommand(
        "scan", "Classify attractors over an (a, r) grid");
    SpecArgs scan_spec;
    scan_spec.attach(c_scan, false);
    std::string scan_a, scan_r, scan_out;
    long scan_transient = 20000, scan_sample = 8192;
    c_scan->add_option("--a", scan_a, "a grid start:stop:step")->required();
    c_scan->add_option("--r", scan_r, "r grid start:stop:step")->required();
    c_scan->add_option("--transient", scan_transient,
                       "Steps discarded before sampling")
        ->capture_default_str();
    c_scan->add_option("--sample", scan_sample, "Tail steps classified")
        ->capture_default_str();
    c_scan->add_option("--out", scan_out, "Output CSV path")->required();

    // burst
    auto* c_burst = app.add_subcommand(
        "burst", "Noise sweep: resident ratios and burst periods");
    SpecArgs burst_spec;
    burst_spec.attach(c_burst);
    std::vector<double> omegas;
    int runs = 50;
    long burst_gens = 1000;
    double threshold = 0.01;
    std::string scheme = "additive", burst_out, burst_agg;
    double bp0 = -1.0, bh0 = -1.0;
    c_burst->add_option("--omega", omegas, "Noise amplitudes")
        ->delimiter(',')
        ->required();
    c_burst->add_option("--runs", runs, "Trajectories per omega")
        ->capture_default_str();
    c_burst->add_option("--gens", burst_gens, "Generations per trajectory")
        ->capture_default_str();
    c_burst->add_option("--threshold", threshold, "Detection threshold")
        ->capture_default_str();
    c_burst->add_option("--scheme", scheme,
                        "Noise entry: additive or as-printed")
        ->check(CLI::IsMember({"additive", "as-printed"}))
        ->capture_default_str();
    c_burst->add_option("--p0", bp0, "Initial plant density");
    c_burst->add_option("--h0", bh0, "Initial herbivore density");
    c_burst->add_option("--out", burst_out, "Per-run CSV path")->required();
    c_burst->add_option("--aggregate-out", burst_agg,
                        "Aggregate CSV path (default <out>.agg.csv)");

    // reproduce
    auto* c_rep = app.add_subcommand(
        "reproduce", "Regenerate a pinned figure/table data set");
    std::string target, out_dir = ".";
    c_rep->add_option("target", target, "Preset name")
        ->check(CLI::IsMember(reproduce_targets()))
        ->required();
    c_rep->add_option("--out-dir", out_dir, "Output directory")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_sim->parsed()) {
            const SystemSpec spec = sim_spec.make();
            State s0 = default_scan_start(spec.model());
            if (p0 >= 0.0) s0.P = p0;
            if (h0 >= 0.0) s0.H = h0;
            const Trajectory traj = simulate(spec, s0, gens, stride);
            csv::write_trajectory(
                sim_out, traj,
                {{"variant", to_string(spec.variant())},
                 {"model", spec.model().name()},
                 {"r", csv::format_double(sim_spec.r)},
                 {"a", csv::format_double(spec.a())}});
        } else if (c_eq->parsed()) {
            emit(equilibrium_report_json(eq_spec.make()), eq_out);
        } else if (c_th->parsed()) {
            emit(thresholds_json(th_spec.make(), th_spec.r), th_out);
        } else if (c_ns->parsed()) {
            ScanSettings settings;
            settings.n_threads = threads;
            const auto curve =
                ns_curve(variant_from_string(ns_spec.variant), ns_spec.model,
                         parse_range(ns_range).values(), settings);
            csv::write_curve(ns_out, curve, {{"family", ns_spec.model}});
        } else if (c_col->parsed()) {
            ScanSettings settings;
            settings.n_threads = threads;
            CollapsePolicy policy;
            if (col_policy == "floor")
                policy = CollapsePolicy::HerbivoreFloor;
            else if (col_policy == "origin")
                policy = CollapsePolicy::OriginCapture;
            else
                policy = col_spec.model == "holling3"
                             ? CollapsePolicy::OriginCapture
                             : CollapsePolicy::HerbivoreFloor;
            const auto curve = collapse_curve(
                variant_from_string(col_spec.variant), col_spec.model,
                parse_range(col_range).values(), policy, settings);
            csv::write_curve(col_out, curve, {{"family", col_spec.model}});
        } else if (c_scan->parsed()) {
            ScanSettings settings;
            settings.T_transient = scan_transient;
            settings.T_sample = scan_sample;
            settings.n_threads = threads;
            const GridScan scan =
                grid_scan(variant_from_string(scan_spec.variant),
                          scan_spec.model, parse_range(scan_a),
                          parse_range(scan_r), settings);
            csv::write_attractor_map(
                scan_out, scan,
                {{"variant", scan_spec.variant},
                 {"family", scan_spec.model},
                 {"transient", std::to_string(scan_transient)},
                 {"sample", std::to_string(scan_sample)}});
        } else if (c_burst->parsed()) {
            const SystemSpec spec = burst_spec.make();
            State s0 = default_scan_start(spec.model());
            if (bp0 >= 0.0) s0.P = bp0;
            if (bh0 >= 0.0) s0.H = bh0;
            const auto table = noise_sweep(
                spec, omegas, runs, burst_gens, seed, s0, threshold,
                scheme_from_string(scheme), threads);
            const csv::Meta meta = {
                {"variant", burst_spec.variant},
                {"model", burst_spec.model},
                {"r", csv::format_double(burst_spec.r)},
                {"a", csv::format_double(burst_spec.a)},
                {"threshold", csv::format_double(threshold)},
                {"scheme", scheme},
                {"seed", std::to_string(seed)}};
            csv::write_burst_runs(burst_out, table, meta);
            csv::write_burst_aggregate(
                burst_agg.empty() ? burst_out + ".agg.csv" : burst_agg,
                table, meta);
        } else if (c_rep->parsed()) {
            for (const auto& path : reproduce(target, out_dir, seed, threads))
                std::cout << path << '\n';
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace herbidyn::cli
