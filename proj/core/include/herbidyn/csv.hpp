#pragma once

#include <string>
#include <utility>
#include <vector>

#include "herbidyn/bifurcation_scan.hpp"
#include "herbidyn/coupled_system.hpp"
#include "herbidyn/stochastic_bursting.hpp"

namespace herbidyn::csv {

// Doubles are written with %.17g so a read-back is bit-exact.
std::string format_double(double x);

// Comment lines start with '#'; the first one carries the schema version,
// e.g. "# herbidyn-csv v1 trajectory".
inline constexpr const char* kVersionPrefix = "# herbidyn-csv v1";

struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Table read(const std::string& path);
void write(const std::string& path, const Table& table);

using Meta = std::vector<std::pair<std::string, std::string>>;

// Schema: t,P,H. One row per stored state.
void write_trajectory(const std::string& path, const Trajectory& traj,
                      const Meta& meta = {});
Trajectory read_trajectory(const std::string& path);

// Schema: r,a,kind,residual. NotFound grid points are omitted; real
// crossings keep the row with kind "real_crossing".
void write_curve(const std::string& path, const BifurcationCurve& curve,
                 const Meta& meta = {});

// Matrix schema: header "r,<a_0>,<a_1>,..."; one row per r with labels.
void write_attractor_map(const std::string& path, const GridScan& scan,
                         const Meta& meta = {});

// Schema: omega,run,ratio,period,n_bursts. Missing periods are blank.
void write_burst_runs(const std::string& path,
                      const std::vector<BurstStats>& table,
                      const Meta& meta = {});

// Schema: omega,mean_period,period_std,runs_with_period,mean_ratio,
// ratio_std.
void write_burst_aggregate(const std::string& path,
                           const std::vector<BurstStats>& table,
                           const Meta& meta = {});

}  // namespace herbidyn::csv
