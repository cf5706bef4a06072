#pragma once

#include <string>
#include <utility>
#include <vector>

namespace herbidyn {

// Single-species plant maps P_{t+1} = F(P_t) = P_t f(P_t).
// f is the per capita growth rate, F the full one-step map.
enum class GrowthKind {
    Logistic,         // f = 1 + q - qP/K, clamped so F never goes negative
    Ricker,           // f = exp(ln(1+q) (1 - P/K))
    LogRicker,        // f = exp(ln(1+q) (1 - ln(1+P)))
    BevertonHoltTable,  // f = w / (1 + cP)
    Hassell,          // f = w / (1 + P^b)
    PowerBH,          // f = w / (1 + P)^b
    GeneralizedBH,    // f = w / (1 + cP^b)
    HollingIIIGrowth, // f = w P^(b-1) / (1 + P^b), needs b > 1
    BevertonHoltR,    // f = r / (1 + P)
    HollingIII,       // f = r P / (1 + P^2)
};

const char* to_string(GrowthKind kind);

class GrowthModel {
  public:
    static GrowthModel logistic(double q, double K);
    static GrowthModel ricker(double q, double K);
    static GrowthModel log_ricker(double q);
    static GrowthModel beverton_holt_table(double w, double c);
    static GrowthModel hassell(double w, double b);
    static GrowthModel power_bh(double w, double b);
    static GrowthModel generalized_bh(double w, double c, double b);
    static GrowthModel holling3_growth(double w, double b);
    static GrowthModel beverton_holt_r(double r);
    static GrowthModel holling3(double r);

    GrowthKind kind() const { return kind_; }

    double per_capita(double P) const;        // f(P)
    double per_capita_deriv(double P) const;  // f'(P)
    double step(double P) const;              // F(P) = P f(P)
    double deriv(double P) const;             // F'(P)

    // f at the origin; the continuous limit for kinds vanishing there.
    double f_at_zero() const;

    // Contest class: F strictly increasing with finite limit C.
    bool claims_monotone_bounded() const;
    // Scramble class: f nonnegative, strictly decreasing, limit 0.
    bool claims_decreasing_per_capita() const;
    // The limit C of F; only meaningful when claims_monotone_bounded().
    double saturation_limit() const;

    // Safely exceeds every fixed point of the map.
    double suggested_search_bound() const;

    std::string name() const;
    std::vector<std::pair<std::string, double>> params() const;

  private:
    GrowthModel(GrowthKind kind, double q, double K, double w, double c,
                double b, double r);

    GrowthKind kind_;
    double q_, K_, w_, c_, b_, r_;
};

enum class RootStability { Sink, Source, Nonhyperbolic };

const char* to_string(RootStability s);

struct PlantRoot {
    double P;
    double deriv;  // F'(P)
    RootStability stability;
};

// Fixed points of P = F(P) in [0, search_bound], sorted ascending.
struct PlantEquilibriumSet {
    std::vector<PlantRoot> roots;

    bool has_positive_root() const { return roots.size() > 1; }
    // Largest root; the carrying state the plant settles to when it persists.
    double top() const;
};

PlantEquilibriumSet plant_equilibria(const GrowthModel& model,
                                     double search_bound);

// Numeric check that the model behaves as its declared class on a grid
// over [0, search_bound]. Throws HypothesisViolation on mismatch.
struct GrowthClass {
    bool monotone_bounded;
    bool decreasing_per_capita;
};

void verify_growth_class(const GrowthModel& model, double search_bound);
void verify_growth_class(const GrowthModel& model, double search_bound,
                         GrowthClass required);

}  // namespace herbidyn
