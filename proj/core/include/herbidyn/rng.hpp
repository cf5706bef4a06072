#pragma once

#include <cmath>
#include <cstdint>

namespace herbidyn {

// SplitMix64: tiny, portable, and identical everywhere, so seeded runs are
// reproducible across platforms and thread counts.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return (next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

// Standard normal deviates via the Marsaglia polar method, spare cached.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * rng_.uniform() - 1.0;
            v = 2.0 * rng_.uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    // Half-normal: redraw until the deviate is nonnegative. Mean sqrt(2/pi).
    double positive_normal() {
        double x;
        do {
            x = normal();
        } while (x < 0.0);
        return x;
    }

  private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace herbidyn
