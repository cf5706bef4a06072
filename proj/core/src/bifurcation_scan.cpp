#include "herbidyn/bifurcation_scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "herbidyn/errors.hpp"
#include "herbidyn/parallel.hpp"

namespace herbidyn {

GrowthModel model_from_family(const std::string& family, double r) {
    if (family == "bh") return GrowthModel::beverton_holt_r(r);
    if (family == "holling3") return GrowthModel::holling3(r);
    if (family == "ricker")
        return GrowthModel::ricker(std::expm1(r), 1.0);
    if (family == "logistic") return GrowthModel::logistic(r - 1.0, 1.0);
    throw UnsupportedModel("unknown model family: " + family);
}

const char* to_string(AttractorLabel label) {
    switch (label) {
        case AttractorLabel::OriginExtinct: return "origin_extinct";
        case AttractorLabel::BoundaryPlantOnly: return "boundary_plant_only";
        case AttractorLabel::InteriorFixed: return "interior_fixed";
        case AttractorLabel::InvariantCycle: return "invariant_cycle";
        case AttractorLabel::InteriorComplex: return "interior_complex";
        case AttractorLabel::CollapsedNumerically:
            return "collapsed_numerically";
    }
    return "unknown";
}

AttractorLabel attractor_label_from_string(const std::string& s) {
    for (AttractorLabel label :
         {AttractorLabel::OriginExtinct, AttractorLabel::BoundaryPlantOnly,
          AttractorLabel::InteriorFixed, AttractorLabel::InvariantCycle,
          AttractorLabel::InteriorComplex,
          AttractorLabel::CollapsedNumerically}) {
        if (s == to_string(label)) return label;
    }
    throw DomainError("unknown attractor label: " + s);
}

const char* to_string(CurvePointStatus s) {
    switch (s) {
        case CurvePointStatus::Found: return "found";
        case CurvePointStatus::NotFound: return "not_found";
        case CurvePointStatus::RealCrossing: return "real_crossing";
    }
    return "unknown";
}

const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::Transcritical: return "transcritical";
        case CurveKind::NeimarkSacker: return "neimark_sacker";
        case CurveKind::Collapse: return "collapse";
        case CurveKind::Heteroclinic: return "heteroclinic";
    }
    return "unknown";
}

State default_scan_start(const GrowthModel& model) {
    const auto eq = plant_equilibria(model, model.suggested_search_bound());
    const double top = eq.top();
    return {top > 0.0 ? 0.9 * top : 1.0, 0.1};
}

namespace {

// Coexistence is on the table when the top boundary state is invadable and
// the nullclines actually meet; a dead herbivore tail then reads as a
// numeric artifact rather than genuine extinction.
bool coexistence_expected(const SystemSpec& spec) {
    if (!spec.model().claims_monotone_bounded()) return false;
    const auto eq = plant_equilibria(spec.model(),
                                     spec.model().suggested_search_bound());
    if (!eq.has_positive_root()) return false;
    if (spec.a() * eq.top() <= 1.0 + 1e-6) return false;
    return interior_gap(spec, 0.0) > 0.0;
}

struct CycleEstimate {
    bool regular = false;
    double period = 0.0;
    double cv = 0.0;
};

// Return times from the cumulative winding angle around the tail centroid,
// with crossing times interpolated inside each step so the estimate is not
// quantized to whole generations.
CycleEstimate estimate_cycle(const std::vector<State>& tail,
                             double cv_max) {
    CycleEstimate est;
    if (tail.size() < 16) return est;

    double cP = 0.0, cH = 0.0;
    for (const State& s : tail) {
        cP += s.P;
        cH += s.H;
    }
    cP /= static_cast<double>(tail.size());
    cH /= static_cast<double>(tail.size());

    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<double> crossings;
    double W = 0.0;
    double theta_prev = std::atan2(tail[0].H - cH, tail[0].P - cP);
    for (std::size_t k = 1; k < tail.size(); ++k) {
        const double theta =
            std::atan2(tail[k].H - cH, tail[k].P - cP);
        double d = theta - theta_prev;
        if (d > two_pi / 2.0) d -= two_pi;
        if (d < -two_pi / 2.0) d += two_pi;
        const double W_next = W + d;
        if (d != 0.0) {
            const long m0 = static_cast<long>(std::floor(W / two_pi));
            const long m1 = static_cast<long>(std::floor(W_next / two_pi));
            for (long m = std::min(m0, m1) + 1; m <= std::max(m0, m1); ++m) {
                const double frac = (static_cast<double>(m) * two_pi - W) / d;
                if (frac >= 0.0 && frac <= 1.0)
                    crossings.push_back(static_cast<double>(k - 1) + frac);
            }
        }
        W = W_next;
        theta_prev = theta;
    }

    if (crossings.size() < 6) return est;
    std::vector<double> returns(crossings.size() - 1);
    for (std::size_t i = 0; i + 1 < crossings.size(); ++i)
        returns[i] = crossings[i + 1] - crossings[i];
    const double mean =
        std::accumulate(returns.begin(), returns.end(), 0.0) /
        static_cast<double>(returns.size());
    if (!(mean > 0.0)) return est;
    double ss = 0.0;
    for (double x : returns) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(returns.size()));
    est.cv = sd / mean;
    est.period = mean;
    est.regular = est.cv < cv_max;
    return est;
}

std::optional<double> interior_spectral_radius(const SystemSpec& spec) {
    if (!spec.model().claims_monotone_bounded()) return std::nullopt;
    if (spec.variant() == Variant::ModelI &&
        !spec.model().claims_decreasing_per_capita())
        return std::nullopt;
    const auto rep = interior_equilibrium(spec);
    if (!rep) return std::nullopt;
    return std::max(std::abs(rep->eig[0]), std::abs(rep->eig[1]));
}

}  // namespace

AttractorClass attractor_classify(const SystemSpec& spec, const State& s0,
                                  long T_transient, long T_sample) {
    ScanSettings st;
    st.T_transient = T_transient;
    st.T_sample = T_sample;
    return attractor_classify(spec, s0, st);
}

AttractorClass attractor_classify(const SystemSpec& spec, const State& s0,
                                  const ScanSettings& st) {
    if (st.T_transient < 1000 || st.T_sample < 1000)
        throw DomainError("attractor_classify: needs at least 1000 "
                          "transient and sample steps");

    const Trajectory warm = simulate(spec, s0, st.T_transient,
                                     st.T_transient);
    const Trajectory tail_traj =
        simulate(spec, warm.states.back(), st.T_sample, 1);
    const auto& tail = tail_traj.states;

    double minP = std::numeric_limits<double>::infinity(), maxP = 0.0;
    double minH = std::numeric_limits<double>::infinity(), maxH = 0.0;
    for (const State& s : tail) {
        minP = std::min(minP, s.P);
        maxP = std::max(maxP, s.P);
        minH = std::min(minH, s.H);
        maxH = std::max(maxH, s.H);
    }

    AttractorClass out;
    out.min_H_tail = minH;
    out.max_H_tail = maxH;
    out.cycle_period_estimate = std::nullopt;
    out.spectral_radius_at_interior = interior_spectral_radius(spec);

    if (maxH < st.delta_collapse) {
        if (maxP < st.delta_collapse)
            out.label = AttractorLabel::OriginExtinct;
        else
            out.label = coexistence_expected(spec)
                            ? AttractorLabel::CollapsedNumerically
                            : AttractorLabel::BoundaryPlantOnly;
        return out;
    }

    const double diameter = std::max(maxP - minP, maxH - minH);
    if (diameter < st.fixed_tol) {
        out.label = AttractorLabel::InteriorFixed;
        return out;
    }

    const CycleEstimate est = estimate_cycle(tail, st.cycle_cv_max);
    if (est.regular) {
        out.label = AttractorLabel::InvariantCycle;
        out.cycle_period_estimate = est.period;
    } else {
        out.label = AttractorLabel::InteriorComplex;
    }
    return out;
}

namespace {

// Spectral radius of the interior Jacobian, or nothing when the interior
// point is absent at this attack rate.
std::optional<double> rho_at(Variant variant, const GrowthModel& model,
                             double a) {
    const SystemSpec spec(variant, model, a);
    const auto rep = interior_equilibrium(spec);
    if (!rep) return std::nullopt;
    return std::max(std::abs(rep->eig[0]), std::abs(rep->eig[1]));
}

}  // namespace

CurvePoint ns_point(Variant variant, const std::string& family, double r,
                    const ScanSettings& st) {
    const GrowthModel model = model_from_family(family, r);
    CurvePoint out{r, 0.0, CurvePointStatus::NotFound, 0.0};

    const auto eq = plant_equilibria(model, model.suggested_search_bound());
    if (!eq.has_positive_root()) return out;
    const double a_crit = 1.0 / eq.top();

    // Find a footing with a stable interior point just above the branch.
    double a_lo = 0.0, rho_lo = 0.0;
    for (double g : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10}) {
        const double a = a_crit * (1.0 + g);
        const auto rho = rho_at(variant, model, a);
        if (rho && *rho < 1.0) {
            a_lo = a;
            rho_lo = *rho;
            break;
        }
    }
    if (a_lo == 0.0) return out;

    // March upward until the radius leaves the unit disk or the interior
    // point disappears (treated as having left it).
    double a_hi = 0.0;
    double a_prev = a_lo;
    for (double a = a_lo * 1.02; a <= a_crit * 1e4; a *= 1.02) {
        const auto rho = rho_at(variant, model, a);
        if (!rho || *rho > 1.0) {
            a_hi = a;
            break;
        }
        a_prev = a;
        rho_lo = *rho;
    }
    if (a_hi == 0.0) return out;
    a_lo = a_prev;

    double a_mid = a_lo;
    double resid = std::abs(rho_lo - 1.0);
    for (int i = 0; i < 200; ++i) {
        a_mid = 0.5 * (a_lo + a_hi);
        const auto rho = rho_at(variant, model, a_mid);
        if (rho) {
            resid = std::abs(*rho - 1.0);
            if (resid < st.ns_rho_tol) break;
        }
        if (!rho || *rho > 1.0)
            a_hi = a_mid;
        else
            a_lo = a_mid;
    }
    if (resid >= st.ns_rho_tol) return out;

    const SystemSpec spec(variant, model, a_mid);
    const auto rep = interior_equilibrium(spec);
    if (!rep) return out;
    out.a = a_mid;
    out.residual = resid;
    out.status = std::abs(rep->eig[0].imag()) > st.ns_im_min
                     ? CurvePointStatus::Found
                     : CurvePointStatus::RealCrossing;
    return out;
}

BifurcationCurve ns_curve(Variant variant, const std::string& family,
                          const std::vector<double>& r_grid,
                          const ScanSettings& st) {
    BifurcationCurve curve;
    curve.kind = CurveKind::NeimarkSacker;
    curve.settings = st;
    curve.points.resize(r_grid.size());
    parallel_for(r_grid.size(), st.n_threads, [&](std::size_t i) {
        curve.points[i] = ns_point(variant, family, r_grid[i], st);
    });
    return curve;
}

BifurcationCurve transcritical_curve(const std::string& family,
                                     const std::vector<double>& r_grid) {
    BifurcationCurve curve;
    curve.kind = CurveKind::Transcritical;
    for (double r : r_grid) {
        CurvePoint p{r, 0.0, CurvePointStatus::NotFound, 0.0};
        const GrowthModel model = model_from_family(family, r);
        const auto eq =
            plant_equilibria(model, model.suggested_search_bound());
        if (eq.has_positive_root()) {
            p.a = 1.0 / eq.top();
            p.status = CurvePointStatus::Found;
        }
        curve.points.push_back(p);
    }
    return curve;
}

namespace {

bool collapse_predicate(Variant variant, const GrowthModel& model, double a,
                        CollapsePolicy policy, const ScanSettings& st) {
    const SystemSpec spec(variant, model, a);
    const State s0 = default_scan_start(model);
    const Trajectory warm = simulate(spec, s0, st.T_transient,
                                     st.T_transient);
    const Trajectory tail =
        simulate(spec, warm.states.back(), st.T_sample, 1);
    double minH = std::numeric_limits<double>::infinity();
    double maxP = 0.0;
    for (const State& s : tail.states) {
        minH = std::min(minH, s.H);
        maxP = std::max(maxP, s.P);
    }
    if (policy == CollapsePolicy::HerbivoreFloor)
        return minH < st.delta_collapse;
    return minH < st.delta_collapse && maxP < st.delta_collapse;
}

}  // namespace

CurvePoint collapse_point(Variant variant, const std::string& family,
                          double r, CollapsePolicy policy,
                          const ScanSettings& st) {
    const GrowthModel model = model_from_family(family, r);
    CurvePoint out{r, 0.0, CurvePointStatus::NotFound, 0.0};

    const auto eq = plant_equilibria(model, model.suggested_search_bound());
    if (!eq.has_positive_root()) return out;
    const double a_crit = 1.0 / eq.top();

    double a_lo = a_crit * 1.01;
    // For a two-root plant map the interior branch closes at a = 1/P_1;
    // origin capture is certain beyond it, so the cap sits just past that
    // edge. One-root maps get a wide multiplicative cap instead.
    double a_hi;
    if (eq.roots.size() > 2)
        a_hi = 1.05 / eq.roots[1].P;
    else
        a_hi = std::max(50.0 * a_crit, 8.0);

    if (collapse_predicate(variant, model, a_lo, policy, st)) return out;
    if (!collapse_predicate(variant, model, a_hi, policy, st)) return out;

    while (a_hi - a_lo > st.collapse_width) {
        const double mid = 0.5 * (a_lo + a_hi);
        if (collapse_predicate(variant, model, mid, policy, st))
            a_hi = mid;
        else
            a_lo = mid;
    }
    out.a = 0.5 * (a_lo + a_hi);
    out.residual = a_hi - a_lo;
    out.status = CurvePointStatus::Found;
    return out;
}

BifurcationCurve collapse_curve(Variant variant, const std::string& family,
                                const std::vector<double>& r_grid,
                                CollapsePolicy policy,
                                const ScanSettings& st) {
    BifurcationCurve curve;
    curve.kind = policy == CollapsePolicy::OriginCapture
                     ? CurveKind::Heteroclinic
                     : CurveKind::Collapse;
    curve.settings = st;
    curve.points.resize(r_grid.size());
    parallel_for(r_grid.size(), st.n_threads, [&](std::size_t i) {
        curve.points[i] =
            collapse_point(variant, family, r_grid[i], policy, st);
    });
    return curve;
}

std::vector<double> Range::values() const {
    if (!(step > 0.0) || !std::isfinite(step))
        throw DomainError("range step must be positive");
    if (!(stop >= start)) throw DomainError("range stop must be >= start");
    const double count = std::floor((stop - start) / step + 1e-9);
    if (count > 1e7) throw DomainError("range too large");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (long i = 0; i <= static_cast<long>(count); ++i)
        out.push_back(start + static_cast<double>(i) * step);
    return out;
}

const AttractorClass& GridScan::at(std::size_t ri, std::size_t ai) const {
    return cells[ri * a_values.size() + ai];
}

GridScan grid_scan(Variant variant, const std::string& family, Range a_range,
                   Range r_range, const ScanSettings& st) {
    GridScan scan;
    scan.a_values = a_range.values();
    scan.r_values = r_range.values();
    scan.settings = st;
    if (scan.a_values.size() < 2 || scan.r_values.size() < 2)
        throw DomainError("grid_scan: need at least 2 points per axis");

    scan.cells.resize(scan.a_values.size() * scan.r_values.size());
    parallel_for(scan.cells.size(), st.n_threads, [&](std::size_t idx) {
        const std::size_t ri = idx / scan.a_values.size();
        const std::size_t ai = idx % scan.a_values.size();
        const GrowthModel model = model_from_family(family,
                                                    scan.r_values[ri]);
        const SystemSpec spec(variant, model, scan.a_values[ai]);
        scan.cells[idx] =
            attractor_classify(spec, default_scan_start(model), st);
    });
    return scan;
}

}  // namespace herbidyn
