#include "herbidyn/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "herbidyn/errors.hpp"

namespace herbidyn::csv {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open for writing: " + path);
    return out;
}

void write_meta(std::ofstream& out, const std::string& schema,
                const Meta& meta) {
    out << kVersionPrefix << ' ' << schema << '\n';
    for (const auto& [key, value] : meta)
        out << "# " << key << '=' << value << '\n';
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw DomainError("bad numeric field: " + s);
    return v;
}

}  // namespace

Table read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open for reading: " + path);
    Table table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            table.comments.push_back(line);
            continue;
        }
        if (!have_header) {
            table.header = split_fields(line);
            have_header = true;
        } else {
            table.rows.push_back(split_fields(line));
        }
    }
    if (!have_header) throw DomainError("no header row in " + path);
    return table;
}

void write(const std::string& path, const Table& table) {
    auto out = open_out(path);
    for (const auto& c : table.comments) out << c << '\n';
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

void write_trajectory(const std::string& path, const Trajectory& traj,
                      const Meta& meta) {
    auto out = open_out(path);
    write_meta(out, "trajectory", meta);
    out << "t,P,H\n";
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        out << traj.time_of(k) << ',' << format_double(traj.states[k].P)
            << ',' << format_double(traj.states[k].H) << '\n';
    }
}

Trajectory read_trajectory(const std::string& path) {
    const Table table = read(path);
    if (table.header != std::vector<std::string>{"t", "P", "H"})
        throw DomainError("not a trajectory file: " + path);
    Trajectory traj;
    traj.states.reserve(table.rows.size());
    std::vector<long> times;
    for (const auto& row : table.rows) {
        if (row.size() != 3)
            throw DomainError("bad trajectory row in " + path);
        times.push_back(std::stol(row[0]));
        traj.states.push_back({parse_double(row[1]), parse_double(row[2])});
    }
    if (times.empty()) throw DomainError("empty trajectory: " + path);
    traj.t0 = times.front();
    traj.stride = times.size() > 1 ? times[1] - times[0] : 1;
    for (std::size_t k = 1; k < times.size(); ++k)
        if (times[k] - times[k - 1] != traj.stride)
            throw DomainError("uneven time stride in " + path);
    return traj;
}

void write_curve(const std::string& path, const BifurcationCurve& curve,
                 const Meta& meta) {
    auto out = open_out(path);
    Meta full = meta;
    full.emplace_back("T_transient",
                      std::to_string(curve.settings.T_transient));
    full.emplace_back("T_sample", std::to_string(curve.settings.T_sample));
    full.emplace_back("delta_collapse",
                      format_double(curve.settings.delta_collapse));
    full.emplace_back("ns_rho_tol",
                      format_double(curve.settings.ns_rho_tol));
    full.emplace_back("collapse_width",
                      format_double(curve.settings.collapse_width));
    write_meta(out, "curve", full);
    out << "r,a,kind,residual\n";
    for (const CurvePoint& p : curve.points) {
        if (p.status == CurvePointStatus::NotFound) continue;
        const char* kind = p.status == CurvePointStatus::RealCrossing
                               ? "real_crossing"
                               : to_string(curve.kind);
        out << format_double(p.r) << ',' << format_double(p.a) << ','
            << kind << ',' << format_double(p.residual) << '\n';
    }
}

void write_attractor_map(const std::string& path, const GridScan& scan,
                         const Meta& meta) {
    auto out = open_out(path);
    write_meta(out, "attractor-map", meta);
    out << "r";
    for (double a : scan.a_values) out << ',' << format_double(a);
    out << '\n';
    for (std::size_t ri = 0; ri < scan.r_values.size(); ++ri) {
        out << format_double(scan.r_values[ri]);
        for (std::size_t ai = 0; ai < scan.a_values.size(); ++ai)
            out << ',' << to_string(scan.at(ri, ai).label);
        out << '\n';
    }
}

void write_burst_runs(const std::string& path,
                      const std::vector<BurstStats>& table,
                      const Meta& meta) {
    auto out = open_out(path);
    write_meta(out, "burst-runs", meta);
    out << "omega,run,ratio,period,n_bursts\n";
    for (const BurstStats& stats : table) {
        for (const BurstRun& r : stats.per_trajectory) {
            out << format_double(stats.omega) << ',' << r.run << ','
                << format_double(r.ratio) << ',';
            if (r.period) out << format_double(*r.period);
            out << ',' << r.n_bursts << '\n';
        }
    }
}

void write_burst_aggregate(const std::string& path,
                           const std::vector<BurstStats>& table,
                           const Meta& meta) {
    auto out = open_out(path);
    write_meta(out, "burst-aggregate", meta);
    out << "omega,mean_period,period_std,runs_with_period,mean_ratio,"
           "ratio_std\n";
    for (const BurstStats& stats : table) {
        out << format_double(stats.omega) << ',';
        if (stats.mean_period) out << format_double(*stats.mean_period);
        out << ',' << format_double(stats.period_std) << ','
            << stats.runs_with_period << ','
            << format_double(stats.mean_ratio) << ','
            << format_double(stats.ratio_std) << '\n';
    }
}

}  // namespace herbidyn::csv
