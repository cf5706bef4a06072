#include "herbidyn/stochastic_bursting.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "herbidyn/errors.hpp"
#include "herbidyn/parallel.hpp"
#include "herbidyn/rng.hpp"

namespace herbidyn {

Trajectory simulate_noisy(const SystemSpec& spec, const NoiseSpec& noise,
                          const State& s0, long T) {
    if (T < 1) throw DomainError("simulate_noisy: T must be at least 1");
    if (!(noise.omega >= 0.0) || !std::isfinite(noise.omega))
        throw DomainError("simulate_noisy: omega must be nonnegative");

    GaussianSource gauss(noise.seed);
    Trajectory traj;
    traj.states.reserve(static_cast<std::size_t>(T) + 1);
    traj.states.push_back(s0);

    State s = s0;
    for (long t = 1; t <= T; ++t) {
        const State base = step(spec, s);
        const double kick = noise.omega * gauss.positive_normal();
        double H;
        if (noise.update == NoiseUpdate::Additive) {
            H = base.H + kick;
        } else {
            // The plant-shaped herbivore expression: F(P) e^{-aH} + kick,
            // which equals the new plant value plus the kick.
            H = base.P + kick;
        }
        s = {base.P, H};
        if (s.P > kOverflowGuard || s.H > kOverflowGuard) {
            std::ostringstream msg;
            msg << "noisy state exceeded " << kOverflowGuard << " at step "
                << t;
            throw SimulationOverflow(msg.str());
        }
        traj.states.push_back(s);
    }
    return traj;
}

namespace {

// First stored index at or past the transient; checks the tail is usable.
std::size_t tail_start(const Trajectory& traj, long transient) {
    if (traj.stride != 1)
        throw DomainError("burst statistics need a stride-1 trajectory");
    if (transient < 0) throw DomainError("transient must be nonnegative");
    const long first = transient - traj.t0;
    if (first < 0) return 0;
    const long remaining =
        static_cast<long>(traj.states.size()) - first;
    if (remaining < 100)
        throw TooShort("fewer than 100 generations after the transient");
    return static_cast<std::size_t>(first);
}

std::vector<std::size_t> upward_crossings(const Trajectory& traj,
                                          double threshold, long transient) {
    const std::size_t start = tail_start(traj, transient);
    std::vector<std::size_t> times;
    for (std::size_t k = start + 1; k < traj.states.size(); ++k) {
        if (traj.states[k - 1].H < threshold &&
            traj.states[k].H >= threshold)
            times.push_back(k);
    }
    return times;
}

double sample_std(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

double resident_time_ratio(const Trajectory& traj, double threshold,
                           long transient) {
    const std::size_t start = tail_start(traj, transient);
    std::size_t below = 0;
    for (std::size_t k = start; k < traj.states.size(); ++k)
        if (traj.states[k].H < threshold) ++below;
    return static_cast<double>(below) /
           static_cast<double>(traj.states.size() - start);
}

long burst_count(const Trajectory& traj, double threshold, long transient) {
    return static_cast<long>(
        upward_crossings(traj, threshold, transient).size());
}

double burst_period(const Trajectory& traj, double threshold,
                    long transient) {
    const auto times = upward_crossings(traj, threshold, transient);
    if (times.size() < 2)
        throw NoBursts("under two upward threshold crossings");
    return static_cast<double>(times.back() - times.front()) /
           static_cast<double>(times.size() - 1);
}

std::vector<BurstStats> noise_sweep(const SystemSpec& spec,
                                    const std::vector<double>& omegas,
                                    int n_traj, long T, std::uint64_t seed,
                                    const State& s0, double threshold,
                                    NoiseUpdate update, int n_threads) {
    if (n_traj < 1) throw DomainError("noise_sweep: n_traj must be positive");

    const std::size_t total = omegas.size() * static_cast<std::size_t>(n_traj);
    std::vector<BurstRun> runs(total);
    parallel_for(total, n_threads, [&](std::size_t idx) {
        const std::size_t oi = idx / static_cast<std::size_t>(n_traj);
        const int run = static_cast<int>(idx % static_cast<std::size_t>(n_traj));
        const NoiseSpec noise{omegas[oi],
                              seed + static_cast<std::uint64_t>(run), update};
        const Trajectory traj = simulate_noisy(spec, noise, s0, T);
        BurstRun& out = runs[idx];
        out.run = run;
        out.ratio = resident_time_ratio(traj, threshold);
        out.n_bursts = burst_count(traj, threshold);
        try {
            out.period = burst_period(traj, threshold);
        } catch (const NoBursts&) {
            out.period = std::nullopt;
        }
    });

    std::vector<BurstStats> table;
    table.reserve(omegas.size());
    for (std::size_t oi = 0; oi < omegas.size(); ++oi) {
        BurstStats stats;
        stats.omega = omegas[oi];
        stats.threshold = threshold;
        stats.per_trajectory.assign(
            runs.begin() + static_cast<std::ptrdiff_t>(oi * n_traj),
            runs.begin() + static_cast<std::ptrdiff_t>((oi + 1) * n_traj));

        std::vector<double> ratios, periods;
        for (const BurstRun& r : stats.per_trajectory) {
            ratios.push_back(r.ratio);
            if (r.period) periods.push_back(*r.period);
        }
        stats.mean_ratio =
            std::accumulate(ratios.begin(), ratios.end(), 0.0) /
            static_cast<double>(ratios.size());
        stats.ratio_std = sample_std(ratios, stats.mean_ratio);
        stats.runs_with_period = static_cast<int>(periods.size());
        if (!periods.empty()) {
            const double mp =
                std::accumulate(periods.begin(), periods.end(), 0.0) /
                static_cast<double>(periods.size());
            stats.mean_period = mp;
            stats.period_std = sample_std(periods, mp);
        } else {
            stats.mean_period = std::nullopt;
            stats.period_std = 0.0;
        }
        table.push_back(std::move(stats));
    }
    return table;
}

std::vector<BurstStats> noise_sweep(const SystemSpec& spec,
                                    const std::vector<double>& omegas,
                                    int n_traj, long T, std::uint64_t seed,
                                    double threshold, NoiseUpdate update,
                                    int n_threads) {
    const auto eq = plant_equilibria(spec.model(),
                                     spec.model().suggested_search_bound());
    const State s0{0.9 * eq.top(), 0.1};
    return noise_sweep(spec, omegas, n_traj, T, seed, s0, threshold, update,
                       n_threads);
}

}  // namespace herbidyn
