#pragma once

#include <optional>
#include <string>
#include <vector>

#include "herbidyn/coupled_system.hpp"

namespace herbidyn {

enum class EquilibriumKind { Origin, Boundary, Interior };
enum class Stability { Sink, Saddle, Source, Nonhyperbolic };

const char* to_string(EquilibriumKind k);
const char* to_string(Stability s);

// Any eigenvalue modulus within 1e-8 of 1 is treated as nonhyperbolic.
Stability classify(const EigenPair& eig);

struct EquilibriumReport {
    State location;
    EquilibriumKind kind;
    int boundary_index = -1;  // i for (P_i, 0); -1 otherwise
    EigenPair eig;
    Stability stability;
    double residual;  // sup norm of step(s) - s
};

struct ThresholdReport {
    // Attack rate where the interior point branches off the top boundary
    // equilibrium; infinite when the plant map has no positive fixed point.
    double a_crit_transcritical;
    bool extinction_predicate;   // a * P_top < 1: herbivore dies out
    bool persistence_predicate;  // monotone map, a * P_1 > 1, f(0) > 1
    bool interior_exists;        // a * P_top > 1
    bool marginal;               // |a * P_top - 1| <= 1e-6
};

// One report per plant fixed point, herbivore absent. The Jacobian there is
// triangular with eigenvalues F'(P_i) and a P_i for both variants.
std::vector<EquilibriumReport> boundary_equilibria(const SystemSpec& spec);

// Gap between the two interior nullclines as a function of H; strictly
// decreasing for the admissible model classes, so its root is the unique
// interior equilibrium. Evaluates the H -> 0 limit exactly.
double interior_gap(const SystemSpec& spec, double H);

// Unique coexistence point, or nullopt when the nullclines do not intersect.
// Variant II needs a monotone saturating map; variant I additionally needs a
// decreasing per capita rate. Throws UnsupportedModel otherwise.
std::optional<EquilibriumReport> interior_equilibrium(const SystemSpec& spec);

ThresholdReport thresholds(const SystemSpec& spec);

// Full analysis serialized as JSON: variant, model, a, all equilibria,
// threshold predicates.
std::string equilibrium_report_json(const SystemSpec& spec);

}  // namespace herbidyn
