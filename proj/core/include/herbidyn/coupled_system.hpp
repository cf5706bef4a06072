#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "herbidyn/growth_models.hpp"

namespace herbidyn {

// Two coupled plant-herbivore maps sharing the escape factor e^{-aH}:
//   I :  P' = F(P) e^{-aH},  H' = P    (1 - e^{-aH})
//   II:  P' = F(P) e^{-aH},  H' = F(P) (1 - e^{-aH})
enum class Variant { ModelI, ModelII };

const char* to_string(Variant v);
Variant variant_from_string(const std::string& s);

class SystemSpec {
  public:
    SystemSpec(Variant variant, GrowthModel model, double a);

    Variant variant() const { return variant_; }
    const GrowthModel& model() const { return model_; }
    double a() const { return a_; }

  private:
    Variant variant_;
    GrowthModel model_;
    double a_;  // attack rate; a H is the expected per-plant damage
};

struct State {
    double P = 0.0;
    double H = 0.0;
};

struct Mat2 {
    double m00 = 0.0, m01 = 0.0;
    double m10 = 0.0, m11 = 0.0;

    double trace() const { return m00 + m11; }
    double det() const { return m00 * m11 - m01 * m10; }
};

// Roots of the characteristic polynomial, ordered by modulus descending,
// then real part, then imaginary part.
using EigenPair = std::array<std::complex<double>, 2>;
EigenPair eigenvalues(const Mat2& M);

State step(const SystemSpec& spec, const State& s);
Mat2 jacobian(const SystemSpec& spec, const State& s);

// states[k] is the state at time t0 + k * stride.
struct Trajectory {
    std::vector<State> states;
    long t0 = 0;
    long stride = 1;

    long time_of(std::size_t k) const {
        return t0 + static_cast<long>(k) * stride;
    }
};

// Iterates T steps from s0, keeping every stride-th state (s0 included).
// Throws SimulationOverflow once any component exceeds 1e12.
Trajectory simulate(const SystemSpec& spec, const State& s0, long T,
                    long stride = 1);

inline constexpr double kOverflowGuard = 1e12;

}  // namespace herbidyn
