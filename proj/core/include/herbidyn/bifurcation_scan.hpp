#pragma once

#include <optional>
#include <string>
#include <vector>

#include "herbidyn/coupled_system.hpp"
#include "herbidyn/equilibrium_analysis.hpp"

namespace herbidyn {

// One-knob families used by curve tracing and scans: the CLI exposes a
// single growth parameter r per family.
//   bh       -> f = r / (1 + P)
//   holling3 -> f = r P / (1 + P^2)
//   ricker   -> f = e^{r (1 - P)}   (q = e^r - 1, K = 1)
//   logistic -> f = r - (r - 1) P   (q = r - 1, K = 1)
GrowthModel model_from_family(const std::string& family, double r);

enum class AttractorLabel {
    OriginExtinct,         // plant and herbivore both die
    BoundaryPlantOnly,     // plant persists, herbivore genuinely dies
    InteriorFixed,         // tail contracts to the coexistence point
    InvariantCycle,        // closed curve with regular rotation
    InteriorComplex,       // persistent but neither fixed nor a clean cycle
    CollapsedNumerically,  // coexistence expected, herbivore rounded away
};

const char* to_string(AttractorLabel label);
AttractorLabel attractor_label_from_string(const std::string& s);

struct AttractorClass {
    AttractorLabel label;
    double min_H_tail;
    double max_H_tail;
    std::optional<double> cycle_period_estimate;
    std::optional<double> spectral_radius_at_interior;
};

// Tunables shared by classification, curve tracing, and scans. Values are
// recorded alongside curve output so results can be reproduced.
struct ScanSettings {
    long T_transient = 20000;
    long T_sample = 8192;
    double delta_collapse = 1e-12;  // below this a population reads as gone
    double fixed_tol = 1e-8;        // tail diameter for a fixed point
    double cycle_cv_max = 0.05;     // return-time spread for a clean cycle
    double ns_rho_tol = 1e-9;       // |rho - 1| at the unit-circle crossing
    double ns_im_min = 1e-8;        // eigenvalue pair must be truly complex
    double collapse_width = 1e-4;   // bisection width in a
    int n_threads = 1;
};

// Scans start just inside the quadrant, near the plant-only state.
State default_scan_start(const GrowthModel& model);

AttractorClass attractor_classify(const SystemSpec& spec, const State& s0,
                                  long T_transient, long T_sample);
AttractorClass attractor_classify(const SystemSpec& spec, const State& s0,
                                  const ScanSettings& settings);

enum class CurvePointStatus {
    Found,
    NotFound,      // condition never met on the searched interval
    RealCrossing,  // modulus crossed 1 with a real pair; not this curve
};

const char* to_string(CurvePointStatus s);

struct CurvePoint {
    double r;
    double a;         // meaningful for Found and RealCrossing
    CurvePointStatus status;
    double residual;  // |rho - 1| at a, or the bisection width in a
};

enum class CurveKind { Transcritical, NeimarkSacker, Collapse, Heteroclinic };

const char* to_string(CurveKind k);

struct BifurcationCurve {
    CurveKind kind;
    std::vector<CurvePoint> points;  // sorted by r, gaps kept as NotFound
    ScanSettings settings;
};

// Attack rate where the interior point's eigenvalue pair crosses the unit
// circle, bisected in a to |rho - 1| < ns_rho_tol.
CurvePoint ns_point(Variant variant, const std::string& family, double r,
                    const ScanSettings& settings = {});

BifurcationCurve ns_curve(Variant variant, const std::string& family,
                          const std::vector<double>& r_grid,
                          const ScanSettings& settings = {});

// Closed form a = 1 / P_top(r) per family.
BifurcationCurve transcritical_curve(const std::string& family,
                                     const std::vector<double>& r_grid);

// What "the attractor hit bottom" means during collapse bisection.
enum class CollapsePolicy {
    HerbivoreFloor,  // tail min H under delta: herbivore rounds to nothing
    OriginCapture,   // additionally tail max P under delta: all captured
};

// Smallest attack rate (width collapse_width) where the policy predicate
// flips from false to true above the interior branch.
CurvePoint collapse_point(Variant variant, const std::string& family,
                          double r, CollapsePolicy policy,
                          const ScanSettings& settings = {});

BifurcationCurve collapse_curve(Variant variant, const std::string& family,
                                const std::vector<double>& r_grid,
                                CollapsePolicy policy,
                                const ScanSettings& settings = {});

// Inclusive arithmetic range start, start+step, ..., up to stop.
struct Range {
    double start;
    double stop;
    double step;

    std::vector<double> values() const;
};

struct GridScan {
    std::vector<double> a_values;
    std::vector<double> r_values;
    // cells[ri * a_values.size() + ai] classifies (r_values[ri], a_values[ai]).
    std::vector<AttractorClass> cells;
    ScanSettings settings;

    const AttractorClass& at(std::size_t ri, std::size_t ai) const;
};

GridScan grid_scan(Variant variant, const std::string& family, Range a_range,
                   Range r_range, const ScanSettings& settings = {});

}  // namespace herbidyn
