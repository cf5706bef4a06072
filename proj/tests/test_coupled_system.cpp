#include "herbidyn/coupled_system.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "herbidyn/errors.hpp"
#include "herbidyn/rng.hpp"

using namespace herbidyn;

namespace {

SystemSpec bh_II(double r, double a) {
    return {Variant::ModelII, GrowthModel::beverton_holt_r(r), a};
}

Mat2 fd_jacobian(const SystemSpec& spec, const State& s) {
    const double h = 1e-6;
    const State pP0 = step(spec, {s.P - h, s.H});
    const State pP1 = step(spec, {s.P + h, s.H});
    const State pH0 = step(spec, {s.P, s.H - h});
    const State pH1 = step(spec, {s.P, s.H + h});
    return {(pP1.P - pP0.P) / (2.0 * h), (pH1.P - pH0.P) / (2.0 * h),
            (pP1.H - pP0.H) / (2.0 * h), (pH1.H - pH0.H) / (2.0 * h)};
}

}  // namespace

TEST_CASE("spec construction validates the attack rate") {
    const auto m = GrowthModel::beverton_holt_r(2.5);
    CHECK_NOTHROW(SystemSpec(Variant::ModelII, m, 2.0));
    CHECK_THROWS_AS(SystemSpec(Variant::ModelII, m, 0.0), DomainError);
    CHECK_THROWS_AS(SystemSpec(Variant::ModelII, m, -1.0), DomainError);
    CHECK_THROWS_AS(
        SystemSpec(Variant::ModelII, m,
                   std::numeric_limits<double>::infinity()),
        DomainError);
}

TEST_CASE("variant names round-trip") {
    CHECK(variant_from_string("I") == Variant::ModelI);
    CHECK(variant_from_string("II") == Variant::ModelII);
    CHECK(variant_from_string(to_string(Variant::ModelI)) ==
          Variant::ModelI);
    CHECK_THROWS_AS(variant_from_string("III"), DomainError);
}

TEST_CASE("one step against hand-computed values") {
    // F(1) = 1.25, escape factor e^{-1}.
    const State next = step(bh_II(2.5, 2.0), {1.0, 0.5});
    CHECK(next.P == doctest::Approx(0.4598493014643029).epsilon(1e-15));
    CHECK(next.H == doctest::Approx(0.7901506985356971).epsilon(1e-15));

    // Same point under variant I: the herbivore feeds on standing biomass.
    const SystemSpec spec1(Variant::ModelI,
                           GrowthModel::beverton_holt_r(2.5), 2.0);
    const State next1 = step(spec1, {1.0, 0.5});
    CHECK(next1.P == doctest::Approx(0.4598493014643029).epsilon(1e-15));
    CHECK(next1.H ==
          doctest::Approx(1.0 * (1.0 - std::exp(-1.0))).epsilon(1e-15));
}

TEST_CASE("herbivore-free axis is invariant, plant-free axis dies") {
    const std::vector<SystemSpec> specs = {
        bh_II(2.5, 2.0),
        {Variant::ModelI, GrowthModel::beverton_holt_r(2.5), 2.0},
        {Variant::ModelII, GrowthModel::holling3(2.5), 0.71},
        {Variant::ModelI, GrowthModel::ricker(1.5, 2.0), 1.0},
    };
    for (const auto& spec : specs) {
        const State on_axis = step(spec, {1.3, 0.0});
        CHECK(on_axis.P == doctest::Approx(spec.model().step(1.3)));
        CHECK(on_axis.H == 0.0);

        const State no_plant = step(spec, {0.0, 0.7});
        CHECK(no_plant.P == 0.0);
        CHECK(no_plant.H == 0.0);
    }
}

TEST_CASE("steps stay in the closed positive quadrant") {
    SplitMix64 rng(7);
    const std::vector<SystemSpec> specs = {
        bh_II(4.55, 3.95),
        {Variant::ModelI, GrowthModel::beverton_holt_r(4.55), 3.95},
        {Variant::ModelII, GrowthModel::holling3(2.5), 0.71},
        {Variant::ModelII, GrowthModel::ricker(std::expm1(3.8), 1.0), 0.95},
    };
    for (const auto& spec : specs) {
        for (int i = 0; i < 200; ++i) {
            const State s{5.0 * rng.uniform(), 5.0 * rng.uniform()};
            const State n = step(spec, s);
            CHECK(n.P >= 0.0);
            CHECK(n.H >= 0.0);
        }
    }
}

TEST_CASE("near-zero herbivore density keeps full precision") {
    // 1 - e^{-aH} evaluated naively loses the leading digits below 1e-8.
    const auto spec = bh_II(2.5, 2.0);
    const double H = 1e-12;
    const State n = step(spec, {1.0, H});
    CHECK(n.H == doctest::Approx(1.25 * 2.0 * H).epsilon(1e-9));
    CHECK(n.H > 0.0);
}

TEST_CASE("jacobian matches finite differences at random points") {
    SplitMix64 rng(99);
    const std::vector<SystemSpec> specs = {
        bh_II(2.5, 2.0),
        {Variant::ModelI, GrowthModel::beverton_holt_r(2.5), 2.0},
        {Variant::ModelII, GrowthModel::holling3(2.5), 0.71},
        {Variant::ModelI, GrowthModel::ricker(1.5, 2.0), 1.0},
        {Variant::ModelII, GrowthModel::hassell(3.0, 2.0), 1.3},
    };
    for (const auto& spec : specs) {
        for (int i = 0; i < 20; ++i) {
            const State s{0.1 + 2.0 * rng.uniform(),
                          0.1 + 1.5 * rng.uniform()};
            const Mat2 J = jacobian(spec, s);
            const Mat2 F = fd_jacobian(spec, s);
            CHECK(J.m00 == doctest::Approx(F.m00).epsilon(1e-4));
            CHECK(J.m01 == doctest::Approx(F.m01).epsilon(1e-4));
            CHECK(J.m10 == doctest::Approx(F.m10).epsilon(1e-4));
            CHECK(J.m11 == doctest::Approx(F.m11).epsilon(1e-4));
        }
    }
}

TEST_CASE("boundary jacobian is triangular with the known eigenvalues") {
    const State boundary{1.5, 0.0};
    const Mat2 J2 = jacobian(bh_II(2.5, 2.0), boundary);
    CHECK(J2.m10 == 0.0);
    const EigenPair eig2 = eigenvalues(J2);
    CHECK(eig2[0].real() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(eig2[0].imag() == 0.0);
    CHECK(eig2[1].real() == doctest::Approx(0.4).epsilon(1e-12));

    // Variant I produces the identical pair on the boundary.
    const SystemSpec spec1(Variant::ModelI,
                           GrowthModel::beverton_holt_r(2.5), 2.0);
    const EigenPair eig1 = eigenvalues(jacobian(spec1, boundary));
    CHECK(eig1[0].real() == doctest::Approx(eig2[0].real()).epsilon(1e-12));
    CHECK(eig1[1].real() == doctest::Approx(eig2[1].real()).epsilon(1e-12));
}

TEST_CASE("eigenvalues of simple matrices") {
    SUBCASE("diagonal") {
        const EigenPair eig = eigenvalues({2.0, 0.0, 0.0, 3.0});
        CHECK(eig[0] == std::complex<double>(3.0, 0.0));
        CHECK(eig[1] == std::complex<double>(2.0, 0.0));
    }
    SUBCASE("rotation has a unit-modulus complex pair") {
        const EigenPair eig = eigenvalues({0.0, -1.0, 1.0, 0.0});
        CHECK(eig[0].real() == doctest::Approx(0.0));
        CHECK(eig[0].imag() == doctest::Approx(1.0));
        CHECK(eig[1].imag() == doctest::Approx(-1.0));
        CHECK(std::abs(eig[0]) == doctest::Approx(1.0));
        CHECK(std::abs(eig[1]) == doctest::Approx(1.0));
    }
    SUBCASE("conjugate pair is ordered by imaginary part") {
        const EigenPair eig = eigenvalues({1.0, -2.0, 2.0, 1.0});
        CHECK(eig[0].imag() > 0.0);
        CHECK(eig[1].imag() < 0.0);
        CHECK(eig[0].real() == doctest::Approx(1.0));
    }
}

TEST_CASE("simulate stores the full path and honours the stride") {
    const auto spec = bh_II(2.5, 2.0);
    const State s0{1.0, 0.5};

    const Trajectory full = simulate(spec, s0, 10);
    REQUIRE(full.states.size() == 11);
    CHECK(full.states[0].P == s0.P);
    CHECK(full.t0 == 0);
    CHECK(full.stride == 1);
    const State one = step(spec, s0);
    CHECK(full.states[1].P == one.P);
    CHECK(full.states[1].H == one.H);

    const Trajectory strided = simulate(spec, s0, 10, 2);
    REQUIRE(strided.states.size() == 6);
    CHECK(strided.time_of(3) == 6);
    for (std::size_t k = 0; k < strided.states.size(); ++k) {
        CHECK(strided.states[k].P == full.states[2 * k].P);
        CHECK(strided.states[k].H == full.states[2 * k].H);
    }

    // Re-running is bit-identical.
    const Trajectory again = simulate(spec, s0, 10);
    for (std::size_t k = 0; k < full.states.size(); ++k) {
        CHECK(again.states[k].P == full.states[k].P);
        CHECK(again.states[k].H == full.states[k].H);
    }
}

TEST_CASE("long runs stay bounded for a saturating plant map") {
    const auto spec = bh_II(4.55, 3.95);
    const Trajectory traj = simulate(spec, {1.0, 1.0}, 10000);
    for (std::size_t k = 500; k < traj.states.size(); ++k) {
        CHECK(traj.states[k].P <= 3.56);
        CHECK(traj.states[k].H <= 3.56);
    }
}

TEST_CASE("weak attack drives the herbivore extinct") {
    const SystemSpec spec(Variant::ModelII, GrowthModel::holling3(2.5), 0.3);
    const Trajectory traj = simulate(spec, {1.8, 0.4}, 5000);
    CHECK(traj.states.back().H < 1e-6);
}

TEST_CASE("runaway growth hits the overflow guard") {
    const SystemSpec spec(Variant::ModelII,
                          GrowthModel::ricker(std::exp(100.0), 1.0), 1.0);
    CHECK_THROWS_AS(simulate(spec, {0.5, 0.0}, 50), SimulationOverflow);
}

TEST_CASE("simulate validates its arguments") {
    const auto spec = bh_II(2.5, 2.0);
    CHECK_THROWS_AS(simulate(spec, {1.0, 0.5}, 0), DomainError);
    CHECK_THROWS_AS(simulate(spec, {1.0, 0.5}, 10, 0), DomainError);
    CHECK_THROWS_AS(simulate(spec, {-1.0, 0.5}, 10), DomainError);
}
