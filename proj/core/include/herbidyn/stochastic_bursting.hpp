#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "herbidyn/coupled_system.hpp"

namespace herbidyn {

// How the half-normal kick omega * R enters the herbivore update.
//   Additive:  H' = (deterministic H update) + omega R
//   AsPrinted: H' = F(P) e^{-aH} + omega R, the plant-shaped expression
// Both exist so their burst statistics can be compared; Additive is the
// default everywhere.
enum class NoiseUpdate { Additive, AsPrinted };

struct NoiseSpec {
    double omega = 0.0;
    std::uint64_t seed = 0;
    NoiseUpdate update = NoiseUpdate::Additive;
};

// Deterministic plant update, noisy herbivore update, one half-normal draw
// per generation. omega = 0 with the Additive scheme reproduces simulate()
// exactly.
Trajectory simulate_noisy(const SystemSpec& spec, const NoiseSpec& noise,
                          const State& s0, long T);

// Generations dropped before any burst statistic is computed.
inline constexpr long kBurstTransient = 100;

// Fraction of post-transient generations with H below the threshold.
// Needs at least 100 post-transient states and a stride-1 trajectory.
double resident_time_ratio(const Trajectory& traj, double threshold = 0.01,
                           long transient = kBurstTransient);

// Number of upward threshold crossings (H moves from below to at-or-above)
// after the transient.
long burst_count(const Trajectory& traj, double threshold = 0.01,
                 long transient = kBurstTransient);

// Mean spacing between consecutive upward crossings. Throws NoBursts when
// fewer than two crossings exist.
double burst_period(const Trajectory& traj, double threshold = 0.01,
                    long transient = kBurstTransient);

struct BurstRun {
    int run;
    double ratio;
    std::optional<double> period;  // empty when under two crossings
    long n_bursts;
};

struct BurstStats {
    double omega;
    double threshold;
    double mean_ratio;
    double ratio_std;
    std::optional<double> mean_period;  // over runs that have a period
    double period_std;
    int runs_with_period;
    std::vector<BurstRun> per_trajectory;
};

// n_traj independent runs per omega, run k seeded with seed + k so the same
// noise streams recur across omega values. Standard deviations use the n-1
// normalizer. Runs without a defined period are counted but not averaged.
std::vector<BurstStats> noise_sweep(const SystemSpec& spec,
                                    const std::vector<double>& omegas,
                                    int n_traj, long T, std::uint64_t seed,
                                    const State& s0, double threshold = 0.01,
                                    NoiseUpdate update = NoiseUpdate::Additive,
                                    int n_threads = 1);

// Sweep starting from the default scan state (0.9 P_top, 0.1).
std::vector<BurstStats> noise_sweep(const SystemSpec& spec,
                                    const std::vector<double>& omegas,
                                    int n_traj, long T, std::uint64_t seed,
                                    double threshold = 0.01,
                                    NoiseUpdate update = NoiseUpdate::Additive,
                                    int n_threads = 1);

}  // namespace herbidyn
