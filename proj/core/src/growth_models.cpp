#include "herbidyn/growth_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "herbidyn/errors.hpp"

namespace herbidyn {

namespace {

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

void need(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

void need_state(double P) {
    if (!(P >= 0.0) || !std::isfinite(P))
        throw DomainError("plant density must be finite and nonnegative");
}

}  // namespace

const char* to_string(GrowthKind kind) {
    switch (kind) {
        case GrowthKind::Logistic: return "logistic";
        case GrowthKind::Ricker: return "ricker";
        case GrowthKind::LogRicker: return "log_ricker";
        case GrowthKind::BevertonHoltTable: return "bh_table";
        case GrowthKind::Hassell: return "hassell";
        case GrowthKind::PowerBH: return "power_bh";
        case GrowthKind::GeneralizedBH: return "generalized_bh";
        case GrowthKind::HollingIIIGrowth: return "holling3_growth";
        case GrowthKind::BevertonHoltR: return "bh";
        case GrowthKind::HollingIII: return "holling3";
    }
    return "unknown";
}

const char* to_string(RootStability s) {
    switch (s) {
        case RootStability::Sink: return "sink";
        case RootStability::Source: return "source";
        case RootStability::Nonhyperbolic: return "nonhyperbolic";
    }
    return "unknown";
}

GrowthModel::GrowthModel(GrowthKind kind, double q, double K, double w,
                         double c, double b, double r)
    : kind_(kind), q_(q), K_(K), w_(w), c_(c), b_(b), r_(r) {}

GrowthModel GrowthModel::logistic(double q, double K) {
    need(finite_positive(q), "logistic: q must be positive");
    need(finite_positive(K), "logistic: K must be positive");
    return {GrowthKind::Logistic, q, K, 0, 0, 0, 0};
}

GrowthModel GrowthModel::ricker(double q, double K) {
    need(finite_positive(q), "ricker: q must be positive");
    need(finite_positive(K), "ricker: K must be positive");
    return {GrowthKind::Ricker, q, K, 0, 0, 0, 0};
}

GrowthModel GrowthModel::log_ricker(double q) {
    need(finite_positive(q), "log_ricker: q must be positive");
    return {GrowthKind::LogRicker, q, 0, 0, 0, 0, 0};
}

GrowthModel GrowthModel::beverton_holt_table(double w, double c) {
    need(std::isfinite(w) && w > 1.0, "bh_table: w must exceed 1");
    need(finite_positive(c), "bh_table: c must be positive");
    return {GrowthKind::BevertonHoltTable, 0, 0, w, c, 0, 0};
}

GrowthModel GrowthModel::hassell(double w, double b) {
    need(std::isfinite(w) && w > 1.0, "hassell: w must exceed 1");
    need(finite_positive(b), "hassell: b must be positive");
    return {GrowthKind::Hassell, 0, 0, w, 0, b, 0};
}

GrowthModel GrowthModel::power_bh(double w, double b) {
    need(std::isfinite(w) && w > 1.0, "power_bh: w must exceed 1");
    need(finite_positive(b), "power_bh: b must be positive");
    return {GrowthKind::PowerBH, 0, 0, w, 0, b, 0};
}

GrowthModel GrowthModel::generalized_bh(double w, double c, double b) {
    need(std::isfinite(w) && w > 1.0, "generalized_bh: w must exceed 1");
    need(finite_positive(c), "generalized_bh: c must be positive");
    need(finite_positive(b), "generalized_bh: b must be positive");
    return {GrowthKind::GeneralizedBH, 0, 0, w, c, b, 0};
}

GrowthModel GrowthModel::holling3_growth(double w, double b) {
    need(finite_positive(w), "holling3_growth: w must be positive");
    need(std::isfinite(b) && b > 1.0, "holling3_growth: b must exceed 1");
    return {GrowthKind::HollingIIIGrowth, 0, 0, w, 0, b, 0};
}

GrowthModel GrowthModel::beverton_holt_r(double r) {
    need(std::isfinite(r) && r > 1.0, "bh: r must exceed 1");
    return {GrowthKind::BevertonHoltR, 0, 0, 0, 0, 0, r};
}

GrowthModel GrowthModel::holling3(double r) {
    need(finite_positive(r), "holling3: r must be positive");
    return {GrowthKind::HollingIII, 0, 0, 0, 0, 0, r};
}

double GrowthModel::per_capita(double P) const {
    need_state(P);
    switch (kind_) {
        case GrowthKind::Logistic:
            return std::max(0.0, 1.0 + q_ - q_ * P / K_);
        case GrowthKind::Ricker:
            return std::exp(std::log1p(q_) * (1.0 - P / K_));
        case GrowthKind::LogRicker:
            return std::exp(std::log1p(q_) * (1.0 - std::log1p(P)));
        case GrowthKind::BevertonHoltTable:
            return w_ / (1.0 + c_ * P);
        case GrowthKind::Hassell:
            return w_ / (1.0 + std::pow(P, b_));
        case GrowthKind::PowerBH:
            return w_ / std::pow(1.0 + P, b_);
        case GrowthKind::GeneralizedBH:
            return w_ / (1.0 + c_ * std::pow(P, b_));
        case GrowthKind::HollingIIIGrowth:
            return w_ * std::pow(P, b_ - 1.0) / (1.0 + std::pow(P, b_));
        case GrowthKind::BevertonHoltR:
            return r_ / (1.0 + P);
        case GrowthKind::HollingIII:
            return r_ * P / (1.0 + P * P);
    }
    throw UnsupportedModel("unhandled growth kind");
}

double GrowthModel::per_capita_deriv(double P) const {
    need_state(P);
    switch (kind_) {
        case GrowthKind::Logistic:
            return (1.0 + q_ - q_ * P / K_ > 0.0) ? -q_ / K_ : 0.0;
        case GrowthKind::Ricker:
            return -std::log1p(q_) / K_ * per_capita(P);
        case GrowthKind::LogRicker:
            return -std::log1p(q_) / (1.0 + P) * per_capita(P);
        case GrowthKind::BevertonHoltTable: {
            const double d = 1.0 + c_ * P;
            return -w_ * c_ / (d * d);
        }
        case GrowthKind::Hassell: {
            const double d = 1.0 + std::pow(P, b_);
            return -w_ * b_ * std::pow(P, b_ - 1.0) / (d * d);
        }
        case GrowthKind::PowerBH:
            return -w_ * b_ * std::pow(1.0 + P, -b_ - 1.0);
        case GrowthKind::GeneralizedBH: {
            const double d = 1.0 + c_ * std::pow(P, b_);
            return -w_ * c_ * b_ * std::pow(P, b_ - 1.0) / (d * d);
        }
        case GrowthKind::HollingIIIGrowth: {
            if (P == 0.0) {
                if (b_ > 2.0) return 0.0;
                if (b_ == 2.0) return w_;
                return std::numeric_limits<double>::infinity();
            }
            const double pb = std::pow(P, b_);
            const double d = 1.0 + pb;
            return w_ * std::pow(P, b_ - 2.0) * (b_ - 1.0 - pb) / (d * d);
        }
        case GrowthKind::BevertonHoltR: {
            const double d = 1.0 + P;
            return -r_ / (d * d);
        }
        case GrowthKind::HollingIII: {
            const double d = 1.0 + P * P;
            return r_ * (1.0 - P * P) / (d * d);
        }
    }
    throw UnsupportedModel("unhandled growth kind");
}

double GrowthModel::step(double P) const { return P * per_capita(P); }

double GrowthModel::deriv(double P) const {
    need_state(P);
    switch (kind_) {
        case GrowthKind::Logistic:
            return (1.0 + q_ - q_ * P / K_ > 0.0)
                       ? 1.0 + q_ - 2.0 * q_ * P / K_
                       : 0.0;
        case GrowthKind::Ricker:
            return per_capita(P) * (1.0 - std::log1p(q_) * P / K_);
        case GrowthKind::LogRicker:
            return per_capita(P) * (1.0 - std::log1p(q_) * P / (1.0 + P));
        case GrowthKind::BevertonHoltTable: {
            const double d = 1.0 + c_ * P;
            return w_ / (d * d);
        }
        case GrowthKind::Hassell: {
            const double pb = std::pow(P, b_);
            const double d = 1.0 + pb;
            return w_ * (1.0 + (1.0 - b_) * pb) / (d * d);
        }
        case GrowthKind::PowerBH:
            return w_ * (1.0 + (1.0 - b_) * P) * std::pow(1.0 + P, -b_ - 1.0);
        case GrowthKind::GeneralizedBH: {
            const double pb = std::pow(P, b_);
            const double d = 1.0 + c_ * pb;
            return w_ * (1.0 + c_ * (1.0 - b_) * pb) / (d * d);
        }
        case GrowthKind::HollingIIIGrowth: {
            const double pb = std::pow(P, b_);
            const double d = 1.0 + pb;
            return w_ * b_ * std::pow(P, b_ - 1.0) / (d * d);
        }
        case GrowthKind::BevertonHoltR: {
            const double d = 1.0 + P;
            return r_ / (d * d);
        }
        case GrowthKind::HollingIII: {
            const double d = 1.0 + P * P;
            return 2.0 * r_ * P / (d * d);
        }
    }
    throw UnsupportedModel("unhandled growth kind");
}

double GrowthModel::f_at_zero() const {
    switch (kind_) {
        case GrowthKind::Logistic:
        case GrowthKind::Ricker:
        case GrowthKind::LogRicker:
            return 1.0 + q_;
        case GrowthKind::BevertonHoltTable:
        case GrowthKind::Hassell:
        case GrowthKind::PowerBH:
        case GrowthKind::GeneralizedBH:
            return w_;
        case GrowthKind::HollingIIIGrowth:
            return 0.0;
        case GrowthKind::BevertonHoltR:
            return r_;
        case GrowthKind::HollingIII:
            return 0.0;
    }
    throw UnsupportedModel("unhandled growth kind");
}

bool GrowthModel::claims_monotone_bounded() const {
    switch (kind_) {
        case GrowthKind::BevertonHoltTable:
        case GrowthKind::HollingIIIGrowth:
        case GrowthKind::BevertonHoltR:
        case GrowthKind::HollingIII:
            return true;
        case GrowthKind::Hassell:
        case GrowthKind::PowerBH:
        case GrowthKind::GeneralizedBH:
            // F saturates only at b = 1; below it F is unbounded, above it
            // F turns over.
            return b_ == 1.0;
        default:
            return false;
    }
}

bool GrowthModel::claims_decreasing_per_capita() const {
    switch (kind_) {
        case GrowthKind::Ricker:
        case GrowthKind::LogRicker:
        case GrowthKind::BevertonHoltTable:
        case GrowthKind::Hassell:
        case GrowthKind::PowerBH:
        case GrowthKind::GeneralizedBH:
        case GrowthKind::BevertonHoltR:
            return true;
        default:
            // Logistic f turns negative; the Holling forms rise from 0 first.
            return false;
    }
}

double GrowthModel::saturation_limit() const {
    switch (kind_) {
        case GrowthKind::BevertonHoltTable:
            return w_ / c_;
        case GrowthKind::Hassell:
        case GrowthKind::PowerBH:
            if (b_ == 1.0) return w_;
            break;
        case GrowthKind::GeneralizedBH:
            if (b_ == 1.0) return w_ / c_;
            break;
        case GrowthKind::HollingIIIGrowth:
            return w_;
        case GrowthKind::BevertonHoltR:
        case GrowthKind::HollingIII:
            return r_;
        default:
            break;
    }
    throw DomainError("saturation_limit: map does not saturate");
}

double GrowthModel::suggested_search_bound() const {
    double top = 0.0;
    switch (kind_) {
        case GrowthKind::Logistic:
        case GrowthKind::Ricker:
            top = K_;
            break;
        case GrowthKind::LogRicker:
            top = std::exp(1.0) - 1.0;
            break;
        case GrowthKind::BevertonHoltTable:
            top = (w_ - 1.0) / c_;
            break;
        case GrowthKind::Hassell:
            top = std::pow(w_ - 1.0, 1.0 / b_);
            break;
        case GrowthKind::PowerBH:
            top = std::pow(w_, 1.0 / b_) - 1.0;
            break;
        case GrowthKind::GeneralizedBH:
            top = std::pow((w_ - 1.0) / c_, 1.0 / b_);
            break;
        case GrowthKind::HollingIIIGrowth:
            // Positive fixed points satisfy w = P + P^(1-b) > P.
            top = w_;
            break;
        case GrowthKind::BevertonHoltR:
            top = r_ - 1.0;
            break;
        case GrowthKind::HollingIII:
            top = r_;
            break;
    }
    return 2.0 * top + 1.0;
}

std::string GrowthModel::name() const { return to_string(kind_); }

std::vector<std::pair<std::string, double>> GrowthModel::params() const {
    switch (kind_) {
        case GrowthKind::Logistic:
        case GrowthKind::Ricker:
            return {{"q", q_}, {"K", K_}};
        case GrowthKind::LogRicker:
            return {{"q", q_}};
        case GrowthKind::BevertonHoltTable:
            return {{"w", w_}, {"c", c_}};
        case GrowthKind::Hassell:
        case GrowthKind::PowerBH:
            return {{"w", w_}, {"b", b_}};
        case GrowthKind::GeneralizedBH:
            return {{"w", w_}, {"c", c_}, {"b", b_}};
        case GrowthKind::HollingIIIGrowth:
            return {{"w", w_}, {"b", b_}};
        case GrowthKind::BevertonHoltR:
        case GrowthKind::HollingIII:
            return {{"r", r_}};
    }
    return {};
}

double PlantEquilibriumSet::top() const {
    if (roots.empty()) throw DomainError("no plant equilibria");
    return roots.back().P;
}

namespace {

RootStability classify_root(double deriv) {
    const double m = std::abs(deriv);
    if (std::abs(m - 1.0) <= 1e-8) return RootStability::Nonhyperbolic;
    return m < 1.0 ? RootStability::Sink : RootStability::Source;
}

// Bisection on F(P) - P with a sign change across [lo, hi].
double bisect_fixed_point(const GrowthModel& model, double lo, double hi) {
    double glo = model.step(lo) - lo;
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gmid = model.step(mid) - mid;
        if (gmid == 0.0) return mid;
        if ((glo < 0.0) == (gmid < 0.0)) {
            lo = mid;
            glo = gmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Positive fixed points when no closed form exists: sign-change scan of
// F(P) - P on a 1e4 grid, then bisection.
std::vector<double> bracketed_roots(const GrowthModel& model, double bound) {
    constexpr int kGrid = 10000;
    std::vector<double> roots;
    const double h = bound / kGrid;
    double x0 = h;
    double g0 = model.step(x0) - x0;
    for (int i = 2; i <= kGrid; ++i) {
        const double x1 = i * h;
        const double g1 = model.step(x1) - x1;
        if (g0 == 0.0) {
            roots.push_back(x0);
        } else if ((g0 < 0.0) != (g1 < 0.0)) {
            roots.push_back(bisect_fixed_point(model, x0, x1));
        }
        x0 = x1;
        g0 = g1;
    }
    if (g0 == 0.0) roots.push_back(x0);
    return roots;
}

}  // namespace

PlantEquilibriumSet plant_equilibria(const GrowthModel& model,
                                     double search_bound) {
    need(finite_positive(search_bound),
         "plant_equilibria: search_bound must be positive");

    std::vector<double> roots{0.0};
    const auto push_if_positive = [&roots](double P) {
        if (std::isfinite(P) && P > 0.0) roots.push_back(P);
    };

    bool closed_form = true;
    switch (model.kind()) {
        case GrowthKind::Logistic:
        case GrowthKind::Ricker: {
            push_if_positive(model.params()[1].second);
            break;
        }
        case GrowthKind::LogRicker:
            push_if_positive(std::exp(1.0) - 1.0);
            break;
        case GrowthKind::BevertonHoltTable: {
            const auto p = model.params();
            push_if_positive((p[0].second - 1.0) / p[1].second);
            break;
        }
        case GrowthKind::Hassell: {
            const auto p = model.params();
            push_if_positive(std::pow(p[0].second - 1.0, 1.0 / p[1].second));
            break;
        }
        case GrowthKind::PowerBH: {
            const auto p = model.params();
            push_if_positive(std::pow(p[0].second, 1.0 / p[1].second) - 1.0);
            break;
        }
        case GrowthKind::GeneralizedBH: {
            const auto p = model.params();
            push_if_positive(std::pow((p[0].second - 1.0) / p[1].second,
                                      1.0 / p[2].second));
            break;
        }
        case GrowthKind::HollingIIIGrowth:
            closed_form = false;
            for (double P : bracketed_roots(model, search_bound))
                push_if_positive(P);
            break;
        case GrowthKind::BevertonHoltR:
            push_if_positive(model.params()[0].second - 1.0);
            break;
        case GrowthKind::HollingIII: {
            const double r = model.params()[0].second;
            const double disc = r * r - 4.0;
            if (disc >= 0.0) {
                const double s = std::sqrt(disc);
                push_if_positive(0.5 * (r - s));
                push_if_positive(0.5 * (r + s));
            }
            break;
        }
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) {
                                return std::abs(a - b) <= 1e-9;
                            }),
                roots.end());

    if (closed_form && roots.back() > search_bound) {
        std::ostringstream msg;
        msg << "plant_equilibria: search_bound " << search_bound
            << " below largest fixed point " << roots.back();
        throw DomainError(msg.str());
    }

    PlantEquilibriumSet out;
    for (double P : roots) {
        const double d = model.deriv(P);
        out.roots.push_back({P, d, classify_root(d)});
    }
    return out;
}

void verify_growth_class(const GrowthModel& model, double search_bound) {
    verify_growth_class(model, search_bound,
                        {model.claims_monotone_bounded(),
                         model.claims_decreasing_per_capita()});
}

void verify_growth_class(const GrowthModel& model, double search_bound,
                         GrowthClass required) {
    need(finite_positive(search_bound),
         "verify_growth_class: search_bound must be positive");

    if (required.monotone_bounded && !model.claims_monotone_bounded())
        throw HypothesisViolation(model.name() +
                                  ": map is not monotone saturating for "
                                  "these parameters");
    if (required.decreasing_per_capita &&
        !model.claims_decreasing_per_capita())
        throw HypothesisViolation(model.name() +
                                  ": per capita rate is not decreasing for "
                                  "these parameters");

    constexpr int kGrid = 10000;
    const double h = search_bound / kGrid;

    if (required.monotone_bounded) {
        const double cap = model.saturation_limit() * (1.0 + 1e-9) + 1e-12;
        double prev = model.step(0.0);
        for (int i = 1; i <= kGrid; ++i) {
            const double cur = model.step(i * h);
            if (cur < prev - 1e-12 * std::max(1.0, std::abs(prev)))
                throw HypothesisViolation(model.name() +
                                          ": map decreases on the grid");
            if (cur > cap)
                throw HypothesisViolation(model.name() +
                                          ": map exceeds its saturation "
                                          "limit");
            prev = cur;
        }
        if (!(model.step(search_bound) > model.step(0.0)))
            throw HypothesisViolation(model.name() + ": map is flat");
    }

    if (required.decreasing_per_capita) {
        double prev = model.per_capita(0.0);
        for (int i = 1; i <= kGrid; ++i) {
            const double cur = model.per_capita(i * h);
            if (cur < 0.0)
                throw HypothesisViolation(model.name() +
                                          ": per capita rate went negative");
            if (!(cur < prev) && prev >= 1e-300)
                throw HypothesisViolation(model.name() +
                                          ": per capita rate fails to "
                                          "decrease on the grid");
            prev = cur;
        }
    }
}

}  // namespace herbidyn
