#include <filesystem>
#include <fstream>
#include <initializer_list>

#include "cli.hpp"
#include "herbidyn/bifurcation_scan.hpp"
#include "herbidyn/csv.hpp"
#include "herbidyn/errors.hpp"
#include "herbidyn/stochastic_bursting.hpp"

namespace herbidyn::cli {

namespace {

namespace fs = std::filesystem;

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void write_script(const std::string& path,
                  std::initializer_list<const char*> lines) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open for writing: " + path);
    out << "set datafile separator ','\n";
    out << "set datafile commentschars '#'\n";
    for (const char* line : lines) out << line << '\n';
}

csv::Meta spec_meta(const SystemSpec& spec, double r) {
    return {{"variant", to_string(spec.variant())},
            {"model", spec.model().name()},
            {"r", csv::format_double(r)},
            {"a", csv::format_double(spec.a())}};
}

// Phase portraits at fixed a over a few growth rates.
std::vector<std::string> trajectories_over_r(
    const std::string& stem, const std::string& family, double a,
    const std::vector<double>& rs, long T, const std::string& out_dir) {
    std::vector<std::string> files;
    for (double r : rs) {
        const GrowthModel model = model_from_family(family, r);
        const SystemSpec spec(Variant::ModelII, model, a);
        const Trajectory traj = simulate(spec, default_scan_start(model), T);
        const std::string path =
            join(out_dir, stem + "-r" + csv::format_double(r) + ".csv");
        csv::write_trajectory(path, traj, spec_meta(spec, r));
        files.push_back(path);
    }
    return files;
}

std::vector<double> table2_omegas() {
    return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
}

std::vector<BurstStats> table2_sweep(std::uint64_t seed, int threads) {
    const SystemSpec spec(Variant::ModelII,
                          GrowthModel::beverton_holt_r(4.55), 3.95);
    return noise_sweep(spec, table2_omegas(), 50, 1000, seed, 0.01,
                       NoiseUpdate::Additive, threads);
}

}  // namespace

std::vector<std::string> reproduce_targets() {
    return {"fig2", "fig3-points", "fig4a", "fig4b",
            "fig5", "fig6",        "table2", "fig7"};
}

std::vector<std::string> reproduce(const std::string& target,
                                   const std::string& out_dir,
                                   std::uint64_t seed, int threads) {
    fs::create_directories(out_dir);
    std::vector<std::string> files;
    ScanSettings settings;
    settings.n_threads = threads;

    if (target == "fig2") {
        files = trajectories_over_r("fig2", "bh", 2.0, {2.5, 2.7, 2.8, 3.0},
                                    3000, out_dir);
        const std::string gp = join(out_dir, "fig2.gp");
        write_script(gp, {"set xlabel 'P'",
                          "set ylabel 'H'",
                          "plot 'fig2-r2.5.csv' every ::500 using 2:3 "
                          "with dots title 'r=2.5', \\",
                          "     'fig2-r2.7.csv' every ::500 using 2:3 "
                          "with dots title 'r=2.7', \\",
                          "     'fig2-r2.8.csv' every ::500 using 2:3 "
                          "with dots title 'r=2.8', \\",
                          "     'fig2-r3.csv' every ::500 using 2:3 "
                          "with dots title 'r=3'"});
        files.push_back(gp);
    } else if (target == "fig3-points") {
        files = trajectories_over_r("fig3", "holling3", 0.71, {2.5, 3.5},
                                    3000, out_dir);
        const std::string gp = join(out_dir, "fig3.gp");
        write_script(gp, {"set xlabel 'P'",
                          "set ylabel 'H'",
                          "plot 'fig3-r2.5.csv' every ::500 using 2:3 "
                          "with dots title 'r=2.5', \\",
                          "     'fig3-r3.5.csv' every ::500 using 2:3 "
                          "with dots title 'r=3.5'"});
        files.push_back(gp);
    } else if (target == "fig4a" || target == "fig4b") {
        const bool bh = target == "fig4a";
        const std::string family = bh ? "bh" : "holling3";
        const auto r_grid =
            Range{bh ? 1.1 : 2.05, 5.0, 0.1}.values();
        const CollapsePolicy policy = bh ? CollapsePolicy::HerbivoreFloor
                                         : CollapsePolicy::OriginCapture;

        const std::string f_tc = join(out_dir, target + "-transcritical.csv");
        csv::write_curve(f_tc, transcritical_curve(family, r_grid),
                         {{"family", family}});
        const std::string f_ns = join(out_dir, target + "-ns.csv");
        csv::write_curve(f_ns,
                         ns_curve(Variant::ModelII, family, r_grid, settings),
                         {{"family", family}});
        const std::string f_co = join(out_dir, target + "-collapse.csv");
        csv::write_curve(
            f_co,
            collapse_curve(Variant::ModelII, family, r_grid, policy,
                           settings),
            {{"family", family}});
        files = {f_tc, f_ns, f_co};

        const std::string gp = join(out_dir, target + ".gp");
        const std::string plot =
            "plot '" + target + "-transcritical.csv' using 1:2 with lines "
            "title 'transcritical', \\";
        const std::string plot2 = "     '" + target +
                                  "-ns.csv' using 1:2 with lines dt 2 "
                                  "title 'Neimark-Sacker', \\";
        const std::string plot3 =
            "     '" + target + "-collapse.csv' using 1:2 with lines "
            "title 'collapse'";
        write_script(gp, {"set xlabel 'r'", "set ylabel 'a'", plot.c_str(),
                          plot2.c_str(), plot3.c_str()});
        files.push_back(gp);
    } else if (target == "fig5") {
        const SystemSpec spec(Variant::ModelII,
                              GrowthModel::beverton_holt_r(4.55), 3.95);
        const NoiseSpec noise{0.01, seed, NoiseUpdate::Additive};
        const Trajectory traj =
            simulate_noisy(spec, noise, default_scan_start(spec.model()),
                           1000);
        const std::string path = join(out_dir, "fig5.csv");
        csv::Meta meta = spec_meta(spec, 4.55);
        meta.emplace_back("omega", csv::format_double(noise.omega));
        meta.emplace_back("seed", std::to_string(seed));
        csv::write_trajectory(path, traj, meta);
        const std::string gp = join(out_dir, "fig5.gp");
        write_script(gp, {"set xlabel 't'",
                          "set ylabel 'H'",
                          "plot 'fig5.csv' using 1:3 with lines "
                          "title 'herbivore'"});
        files = {path, gp};
    } else if (target == "fig6" || target == "table2") {
        const auto table = table2_sweep(seed, threads);
        csv::Meta meta = {{"a", "3.95"},
                          {"r", "4.55"},
                          {"threshold", "0.01"},
                          {"runs", "50"},
                          {"gens", "1000"},
                          {"seed", std::to_string(seed)}};
        if (target == "table2") {
            const std::string f_runs = join(out_dir, "table2-runs.csv");
            csv::write_burst_runs(f_runs, table, meta);
            const std::string f_agg = join(out_dir, "table2.csv");
            csv::write_burst_aggregate(f_agg, table, meta);
            files = {f_runs, f_agg};
        } else {
            const std::string f_agg = join(out_dir, "fig6.csv");
            csv::write_burst_aggregate(f_agg, table, meta);
            const std::string gp = join(out_dir, "fig6.gp");
            write_script(gp, {"set xlabel 'noise amplitude'",
                              "set ylabel 'resident time ratio'",
                              "set logscale x",
                              "set yrange [0:1]",
                              "plot 'fig6.csv' using 1:5:6 with yerrorbars "
                              "title 'ratio'"});
            files = {f_agg, gp};
        }
    } else if (target == "fig7") {
        files = trajectories_over_r("fig7", "ricker", 0.95, {3.8, 3.85},
                                    20000, out_dir);
        const std::string gp = join(out_dir, "fig7.gp");
        write_script(gp, {"set xlabel 'P'",
                          "set ylabel 'H'",
                          "plot 'fig7-r3.8.csv' every ::2000 using 2:3 "
                          "with dots title 'r=3.8', \\",
                          "     'fig7-r3.85.csv' every ::2000 using 2:3 "
                          "with dots title 'r=3.85'"});
        files.push_back(gp);
    } else {
        throw DomainError("unknown reproduce target: " + target);
    }
    return files;
}

}  // namespace herbidyn::cli
