#include "herbidyn/growth_models.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "herbidyn/errors.hpp"
#include "herbidyn/rng.hpp"

using namespace herbidyn;

namespace {

// One representative per kind, parameters inside the admissible ranges.
std::vector<GrowthModel> model_zoo() {
    return {
        GrowthModel::logistic(1.5, 2.0),
        GrowthModel::ricker(1.5, 2.0),
        GrowthModel::log_ricker(1.5),
        GrowthModel::beverton_holt_table(3.0, 0.5),
        GrowthModel::hassell(3.0, 1.0),
        GrowthModel::hassell(3.0, 2.0),
        GrowthModel::power_bh(3.0, 1.0),
        GrowthModel::power_bh(3.0, 2.0),
        GrowthModel::generalized_bh(3.0, 0.5, 1.0),
        GrowthModel::generalized_bh(3.0, 0.5, 2.0),
        GrowthModel::holling3_growth(3.0, 2.0),
        GrowthModel::holling3_growth(2.5, 3.0),
        GrowthModel::beverton_holt_r(2.5),
        GrowthModel::holling3(2.5),
    };
}

double fd_deriv(const GrowthModel& m, double P) {
    const double h = 1e-6;
    return (m.step(P + h) - m.step(P - h)) / (2.0 * h);
}

double fd_per_capita_deriv(const GrowthModel& m, double P) {
    const double h = 1e-6;
    return (m.per_capita(P + h) - m.per_capita(P - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("per capita rate at the origin") {
    CHECK(GrowthModel::logistic(1.5, 2.0).f_at_zero() == doctest::Approx(2.5));
    CHECK(GrowthModel::ricker(1.5, 2.0).f_at_zero() == doctest::Approx(2.5));
    CHECK(GrowthModel::log_ricker(1.5).f_at_zero() == doctest::Approx(2.5));
    CHECK(GrowthModel::beverton_holt_table(3.0, 0.5).f_at_zero() ==
          doctest::Approx(3.0));
    CHECK(GrowthModel::hassell(3.0, 2.0).f_at_zero() == doctest::Approx(3.0));
    CHECK(GrowthModel::power_bh(3.0, 2.0).f_at_zero() == doctest::Approx(3.0));
    CHECK(GrowthModel::generalized_bh(3.0, 0.5, 2.0).f_at_zero() ==
          doctest::Approx(3.0));
    CHECK(GrowthModel::holling3_growth(3.0, 2.0).f_at_zero() == 0.0);
    CHECK(GrowthModel::beverton_holt_r(2.5).f_at_zero() ==
          doctest::Approx(2.5));
    CHECK(GrowthModel::holling3(2.5).f_at_zero() == 0.0);

    // The limit value is also the actual evaluation at P = 0.
    for (const auto& m : model_zoo())
        CHECK(m.per_capita(0.0) == doctest::Approx(m.f_at_zero()));
}

TEST_CASE("point evaluations with known values") {
    const auto bh = GrowthModel::beverton_holt_r(2.5);
    CHECK(bh.step(0.0) == 0.0);
    CHECK(bh.step(1.5) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(bh.per_capita(0.0) == doctest::Approx(2.5));

    const auto h3 = GrowthModel::holling3(2.5);
    CHECK(h3.step(2.0) == doctest::Approx(2.0).epsilon(1e-12));

    // Per capita rate returns to 1 at the carrying capacity.
    const auto ricker = GrowthModel::ricker(1.5, 2.0);
    CHECK(ricker.per_capita(2.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("analytic derivatives match central differences") {
    const std::vector<double> grid = {0.05, 0.3, 0.7, 1.0, 1.8, 2.5, 4.0};
    for (const auto& m : model_zoo()) {
        for (double P : grid) {
            const double dF = m.deriv(P);
            CHECK(dF == doctest::Approx(fd_deriv(m, P)).epsilon(1e-5));
            const double df = m.per_capita_deriv(P);
            CHECK(df ==
                  doctest::Approx(fd_per_capita_deriv(m, P)).epsilon(1e-5));
        }
    }
}

TEST_CASE("inadmissible parameters and negative densities are rejected") {
    CHECK_THROWS_AS(GrowthModel::beverton_holt_r(1.0), DomainError);
    CHECK_THROWS_AS(GrowthModel::beverton_holt_r(0.5), DomainError);
    CHECK_THROWS_AS(GrowthModel::beverton_holt_table(0.9, 1.0), DomainError);
    CHECK_THROWS_AS(GrowthModel::holling3_growth(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(GrowthModel::logistic(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(GrowthModel::holling3(0.0), DomainError);
    CHECK_THROWS_AS(GrowthModel::beverton_holt_r(2.5).step(-0.1),
                    DomainError);
    CHECK_THROWS_AS(GrowthModel::holling3(2.5).deriv(-1.0), DomainError);
}

TEST_CASE("fixed points from closed forms") {
    SUBCASE("single positive root, unstable origin") {
        const auto eq =
            plant_equilibria(GrowthModel::beverton_holt_r(2.5), 10.0);
        REQUIRE(eq.roots.size() == 2);
        CHECK(eq.roots[0].P == 0.0);
        CHECK(eq.roots[0].stability == RootStability::Source);
        CHECK(eq.roots[1].P == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(eq.roots[1].stability == RootStability::Sink);
        CHECK(eq.roots[1].deriv == doctest::Approx(0.4).epsilon(1e-12));
        CHECK(eq.top() == doctest::Approx(1.5));
        CHECK(eq.has_positive_root());
    }

    SUBCASE("bistable pair around an unstable middle root") {
        const auto eq = plant_equilibria(GrowthModel::holling3(2.5), 10.0);
        REQUIRE(eq.roots.size() == 3);
        CHECK(eq.roots[0].P == 0.0);
        CHECK(eq.roots[0].stability == RootStability::Sink);
        CHECK(eq.roots[1].P == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(eq.roots[1].stability == RootStability::Source);
        CHECK(eq.roots[2].P == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(eq.roots[2].stability == RootStability::Sink);
    }

    SUBCASE("origin only when growth never outpaces loss") {
        const auto eq = plant_equilibria(GrowthModel::holling3(1.5), 10.0);
        REQUIRE(eq.roots.size() == 1);
        CHECK(eq.roots[0].P == 0.0);
        CHECK(eq.roots[0].stability == RootStability::Sink);
        CHECK_FALSE(eq.has_positive_root());
    }

    SUBCASE("double root is reported once, nonhyperbolic") {
        const auto eq = plant_equilibria(GrowthModel::holling3(2.0), 10.0);
        REQUIRE(eq.roots.size() == 2);
        CHECK(eq.roots[1].P == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(eq.roots[1].stability == RootStability::Nonhyperbolic);
    }

    SUBCASE("remaining closed forms") {
        CHECK(plant_equilibria(GrowthModel::logistic(1.5, 2.0), 10.0).top() ==
              doctest::Approx(2.0));
        CHECK(plant_equilibria(GrowthModel::ricker(1.5, 2.0), 10.0).top() ==
              doctest::Approx(2.0));
        CHECK(plant_equilibria(GrowthModel::log_ricker(1.5), 10.0).top() ==
              doctest::Approx(std::exp(1.0) - 1.0));
        CHECK(plant_equilibria(GrowthModel::beverton_holt_table(3.0, 0.5),
                               10.0)
                  .top() == doctest::Approx(4.0));
        CHECK(plant_equilibria(GrowthModel::hassell(3.0, 1.0), 10.0).top() ==
              doctest::Approx(2.0));
        CHECK(plant_equilibria(GrowthModel::power_bh(4.0, 2.0), 10.0).top() ==
              doctest::Approx(1.0));
        CHECK(plant_equilibria(GrowthModel::generalized_bh(3.0, 0.5, 2.0),
                               10.0)
                  .top() == doctest::Approx(2.0));
    }
}

TEST_CASE("bracketed roots match hand-solved values") {
    // w = 3, b = 2: positive fixed points solve 3P = 1 + P^2.
    const auto eq =
        plant_equilibria(GrowthModel::holling3_growth(3.0, 2.0), 10.0);
    REQUIRE(eq.roots.size() == 3);
    const double s5 = std::sqrt(5.0);
    CHECK(eq.roots[1].P ==
          doctest::Approx(0.5 * (3.0 - s5)).epsilon(1e-10));
    CHECK(eq.roots[2].P ==
          doctest::Approx(0.5 * (3.0 + s5)).epsilon(1e-10));
    CHECK(eq.roots[1].stability == RootStability::Source);
    CHECK(eq.roots[2].stability == RootStability::Sink);
}

TEST_CASE("every reported root is a fixed point") {
    for (const auto& m : model_zoo()) {
        const auto eq = plant_equilibria(m, m.suggested_search_bound());
        for (const auto& root : eq.roots)
            CHECK(std::abs(m.step(root.P) - root.P) < 1e-10);
    }
}

TEST_CASE("search bound below the largest root is rejected") {
    CHECK_THROWS_AS(plant_equilibria(GrowthModel::beverton_holt_r(5.0), 1.0),
                    DomainError);
}

TEST_CASE("stability alternates for monotone saturating maps") {
    for (const auto& m : model_zoo()) {
        if (!m.claims_monotone_bounded()) continue;
        const auto eq = plant_equilibria(m, m.suggested_search_bound());
        bool nondegenerate = true;
        for (const auto& root : eq.roots)
            if (root.stability == RootStability::Nonhyperbolic)
                nondegenerate = false;
        if (!nondegenerate || eq.roots.size() < 2) continue;
        CHECK(eq.roots.back().stability == RootStability::Sink);
        for (std::size_t i = 1; i < eq.roots.size(); ++i)
            CHECK(eq.roots[i].stability != eq.roots[i - 1].stability);
    }
}

TEST_CASE("monotone saturating maps trap iterates under the top root") {
    SplitMix64 rng(2024);
    for (const auto& m : model_zoo()) {
        if (!m.claims_monotone_bounded()) continue;
        const auto eq = plant_equilibria(m, m.suggested_search_bound());
        for (int trial = 0; trial < 5; ++trial) {
            double P = rng.uniform() * m.suggested_search_bound();
            if (P <= 0.0) P = 0.5;
            for (int t = 0; t < 10000; ++t) P = m.step(P);
            CHECK(P <= eq.top() + 1e-8);
        }
    }
}

TEST_CASE("declared growth classes survive the numeric check") {
    for (const auto& m : model_zoo())
        CHECK_NOTHROW(verify_growth_class(m, m.suggested_search_bound()));
}

TEST_CASE("requiring an unsupported class is a hard error") {
    // b = 2 makes the map hump-shaped, so the monotone class must fail.
    const auto hump = GrowthModel::power_bh(3.0, 2.0);
    CHECK_THROWS_AS(verify_growth_class(hump, 10.0, {true, false}),
                    HypothesisViolation);

    // The Holling forms start at f(0) = 0, so f cannot be decreasing.
    const auto h3 = GrowthModel::holling3(2.5);
    CHECK_THROWS_AS(verify_growth_class(h3, 10.0, {false, true}),
                    HypothesisViolation);

    // The declared classes themselves pass.
    CHECK_NOTHROW(verify_growth_class(hump, 10.0, {false, true}));
    CHECK_NOTHROW(verify_growth_class(h3, 10.0, {true, false}));
}

TEST_CASE("class claims by kind") {
    CHECK(GrowthModel::beverton_holt_r(2.5).claims_monotone_bounded());
    CHECK(GrowthModel::holling3(2.5).claims_monotone_bounded());
    CHECK(GrowthModel::beverton_holt_table(3.0, 0.5)
              .claims_monotone_bounded());
    CHECK(GrowthModel::holling3_growth(3.0, 2.0).claims_monotone_bounded());
    CHECK(GrowthModel::hassell(3.0, 1.0).claims_monotone_bounded());
    CHECK_FALSE(GrowthModel::hassell(3.0, 2.0).claims_monotone_bounded());
    CHECK_FALSE(GrowthModel::ricker(1.5, 2.0).claims_monotone_bounded());
    CHECK_FALSE(GrowthModel::logistic(1.5, 2.0).claims_monotone_bounded());

    CHECK(GrowthModel::beverton_holt_r(2.5).claims_decreasing_per_capita());
    CHECK(GrowthModel::ricker(1.5, 2.0).claims_decreasing_per_capita());
    CHECK_FALSE(GrowthModel::holling3(2.5).claims_decreasing_per_capita());
    CHECK_FALSE(GrowthModel::logistic(1.5, 2.0)
                    .claims_decreasing_per_capita());
}

TEST_CASE("saturation limits") {
    CHECK(GrowthModel::beverton_holt_r(2.5).saturation_limit() ==
          doctest::Approx(2.5));
    CHECK(GrowthModel::holling3(2.5).saturation_limit() ==
          doctest::Approx(2.5));
    CHECK(GrowthModel::beverton_holt_table(3.0, 0.5).saturation_limit() ==
          doctest::Approx(6.0));
    CHECK(GrowthModel::hassell(3.0, 1.0).saturation_limit() ==
          doctest::Approx(3.0));
    CHECK(GrowthModel::holling3_growth(3.0, 2.0).saturation_limit() ==
          doctest::Approx(3.0));
    CHECK_THROWS_AS(GrowthModel::ricker(1.5, 2.0).saturation_limit(),
                    DomainError);
}

TEST_CASE("names and parameter lists") {
    const auto m = GrowthModel::generalized_bh(3.0, 0.5, 2.0);
    CHECK(m.name() == "generalized_bh");
    const auto params = m.params();
    REQUIRE(params.size() == 3);
    CHECK(params[0].first == "w");
    CHECK(params[0].second == 3.0);
    CHECK(params[1].first == "c");
    CHECK(params[2].first == "b");
    CHECK(GrowthModel::beverton_holt_r(2.5).name() == "bh");
    CHECK(GrowthModel::holling3(2.5).name() == "holling3");
}
