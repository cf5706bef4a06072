#include "herbidyn/equilibrium_analysis.hpp"

#include <cmath>
#include <limits>

#include "herbidyn/errors.hpp"

namespace herbidyn {

const char* to_string(EquilibriumKind k) {
    switch (k) {
        case EquilibriumKind::Origin: return "origin";
        case EquilibriumKind::Boundary: return "boundary";
        case EquilibriumKind::Interior: return "interior";
    }
    return "unknown";
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::Sink: return "sink";
        case Stability::Saddle: return "saddle";
        case Stability::Source: return "source";
        case Stability::Nonhyperbolic: return "nonhyperbolic";
    }
    return "unknown";
}

Stability classify(const EigenPair& eig) {
    const double m0 = std::abs(eig[0]);
    const double m1 = std::abs(eig[1]);
    if (std::abs(m0 - 1.0) <= 1e-8 || std::abs(m1 - 1.0) <= 1e-8)
        return Stability::Nonhyperbolic;
    if (m0 < 1.0 && m1 < 1.0) return Stability::Sink;
    if (m0 > 1.0 && m1 > 1.0) return Stability::Source;
    return Stability::Saddle;
}

namespace {

double fixed_point_residual(const SystemSpec& spec, const State& s) {
    const State n = step(spec, s);
    return std::max(std::abs(n.P - s.P), std::abs(n.H - s.H));
}

EquilibriumReport make_report(const SystemSpec& spec, const State& s,
                              EquilibriumKind kind, int index) {
    EquilibriumReport rep;
    rep.location = s;
    rep.kind = kind;
    rep.boundary_index = index;
    rep.eig = eigenvalues(jacobian(spec, s));
    rep.stability = classify(rep.eig);
    rep.residual = fixed_point_residual(spec, s);
    return rep;
}

// Series for H/(e^{aH}-1) and H/(1-e^{-aH}) near 0: 1/a -/+ H/2 + aH^2/12.
double falling_nullcline(double a, double H) {
    const double aH = a * H;
    if (aH < 1e-5) return 1.0 / a - H / 2.0 + aH * H / 12.0;
    return H / std::expm1(aH);
}

double rising_nullcline(double a, double H) {
    const double aH = a * H;
    if (aH < 1e-5) return 1.0 / a + H / 2.0 + aH * H / 12.0;
    return H / (-std::expm1(-aH));
}

}  // namespace

std::vector<EquilibriumReport> boundary_equilibria(const SystemSpec& spec) {
    const auto eq = plant_equilibria(spec.model(),
                                     spec.model().suggested_search_bound());
    std::vector<EquilibriumReport> out;
    out.reserve(eq.roots.size());
    for (std::size_t i = 0; i < eq.roots.size(); ++i) {
        const EquilibriumKind kind =
            eq.roots[i].P == 0.0 ? EquilibriumKind::Origin
                                 : EquilibriumKind::Boundary;
        out.push_back(make_report(spec, {eq.roots[i].P, 0.0}, kind,
                                  static_cast<int>(i)));
    }
    return out;
}

double interior_gap(const SystemSpec& spec, double H) {
    if (!(H >= 0.0) || !std::isfinite(H))
        throw DomainError("interior_gap: H must be finite and nonnegative");
    const double a = spec.a();
    if (spec.variant() == Variant::ModelII) {
        const double P = falling_nullcline(a, H);
        return spec.model().step(P) - rising_nullcline(a, H);
    }
    const double P = rising_nullcline(a, H);
    return spec.model().per_capita(P) - std::exp(a * H);
}

std::optional<EquilibriumReport> interior_equilibrium(const SystemSpec& spec) {
    const GrowthModel& m = spec.model();
    if (!m.claims_monotone_bounded())
        throw UnsupportedModel(m.name() +
                               ": interior solve needs a monotone "
                               "saturating map");
    if (spec.variant() == Variant::ModelI &&
        !m.claims_decreasing_per_capita())
        throw UnsupportedModel(m.name() +
                               ": variant I interior solve needs a "
                               "decreasing per capita rate");

    const auto eq = plant_equilibria(m, m.suggested_search_bound());
    if (!eq.has_positive_root()) return std::nullopt;
    const double Pn = eq.top();
    const double a = spec.a();
    if (a * Pn <= 1.0 + 1e-6) return std::nullopt;

    // The gap at H -> 0+ is F(1/a) - 1/a (variant II) or f(1/a) - 1
    // (variant I); when it already starts nonpositive the nullclines never
    // meet, e.g. the Holling forms once 1/a drops below the lowest positive
    // fixed point.
    if (interior_gap(spec, 0.0) <= 0.0) return std::nullopt;

    double lo = 0.0;
    double glo = interior_gap(spec, lo);
    double hi = a * Pn * Pn;
    double ghi = interior_gap(spec, hi);
    for (int i = 0; i < 60 && ghi > 0.0; ++i) {
        lo = hi;
        glo = ghi;
        hi *= 2.0;
        ghi = interior_gap(spec, hi);
    }
    if (ghi > 0.0)
        throw BracketFailure("interior_equilibrium: gap never changes sign");
    if (glo <= 0.0)
        throw BracketFailure("interior_equilibrium: lost the positive end");

    double H = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        H = 0.5 * (lo + hi);
        const double g = interior_gap(spec, H);
        if (std::abs(g) < 1e-12) break;
        if (g > 0.0)
            lo = H;
        else
            hi = H;
    }

    const double P = spec.variant() == Variant::ModelII
                         ? falling_nullcline(a, H)
                         : rising_nullcline(a, H);
    return make_report(spec, {P, H}, EquilibriumKind::Interior, -1);
}

ThresholdReport thresholds(const SystemSpec& spec) {
    const GrowthModel& m = spec.model();
    const auto eq = plant_equilibria(m, m.suggested_search_bound());
    const double a = spec.a();
    const double Pn = eq.top();

    ThresholdReport rep;
    rep.a_crit_transcritical =
        Pn > 0.0 ? 1.0 / Pn : std::numeric_limits<double>::infinity();
    rep.extinction_predicate = a * Pn < 1.0;
    rep.interior_exists = a * Pn > 1.0;
    rep.marginal = std::abs(a * Pn - 1.0) <= 1e-6;

    const double P1 = eq.has_positive_root() ? eq.roots[1].P : 0.0;
    rep.persistence_predicate = m.claims_monotone_bounded() &&
                                a * P1 > 1.0 && m.f_at_zero() > 1.0;
    return rep;
}

}  // namespace herbidyn
