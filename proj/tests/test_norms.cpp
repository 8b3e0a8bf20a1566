#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "radl1/closed_form.hpp"
#include "radl1/norms.hpp"

using namespace radl1;

TEST_CASE("l2 norm of simple profiles", "[norms]") {
    SECTION("constant 1 on the unit ball is sqrt(4 pi / 3)") {
        const auto g = RadialGrid::uniform(8193, 1.0);
        const double got = l2_norm(RadialProfile::constant(g, 1.0));
        REQUIRE(got == Catch::Approx(std::sqrt(four_pi / 3.0)).epsilon(1e-8));
    }
    SECTION("zero profile") {
        const auto g = RadialGrid::uniform(64, 1.0);
        REQUIRE(l2_norm(RadialProfile::zero(g)) == 0.0);
    }
    SECTION("closed-form minimizer is unit norm") {
        const auto p = solve_parameters(1.0);
        // independent oracle: high-resolution Simpson quadrature of the formula
        const double hi_res = oracle::simpson(
            [&](double r) { return eval_minimizer(p, r) * eval_minimizer(p, r) * r * r; }, 0.0,
            p.R, 1 << 20);
        REQUIRE(std::sqrt(four_pi * hi_res) == Catch::Approx(1.0).margin(1e-10));

        const auto g = RadialGrid::uniform(4096, 1.5 * p.R);
        REQUIRE(l2_norm(sample(p, g)) == Catch::Approx(1.0).margin(1e-8));
    }
}

TEST_CASE("l1 norm of simple profiles", "[norms]") {
    const auto g = RadialGrid::uniform(8193, 1.0);
    REQUIRE(l1_norm(RadialProfile::constant(g, 1.0)) == Catch::Approx(four_pi / 3.0).epsilon(1e-7));
    REQUIRE(l1_norm(RadialProfile::constant(g, -1.0)) == Catch::Approx(four_pi / 3.0).epsilon(1e-7));

    SECTION("minimizer satisfies l1 = (2/3) |grad phi|^2 / beta") {
        const auto p = solve_parameters(1.0);
        const auto grid = RadialGrid::uniform(4096, 1.5 * p.R);
        const auto prof = sample(p, grid);
        const double grad_sq = 2.0 * kinetic_energy(prof);
        REQUIRE(l1_norm(prof) == Catch::Approx(2.0 / 3.0 * grad_sq).epsilon(1e-6));
    }
}

TEST_CASE("kinetic energy", "[norms]") {
    SECTION("constant profile has none") {
        const auto g = RadialGrid::uniform(128, 2.0);
        REQUIRE(kinetic_energy(RadialProfile::constant(g, 3.0)) == 0.0);
    }
    SECTION("linear profile r on [0,1]") {
        const auto g = RadialGrid::uniform(8193, 1.0);
        const auto p = RadialProfile::from_function(g, [](double r) { return r; });
        REQUIRE(kinetic_energy(p) == Catch::Approx(0.5 * four_pi / 3.0).epsilon(1e-8));
    }
    SECTION("virial form on the minimizer") {
        const auto params = solve_parameters(1.0);
        const auto g = RadialGrid::uniform(4096, 1.5 * params.R);
        const auto prof = sample(params, g);
        REQUIRE(2.0 * kinetic_energy(prof) ==
                Catch::Approx(1.5 * params.beta * l1_norm(prof)).epsilon(1e-6));
    }
    SECTION("needs three nodes") {
        const auto g = RadialGrid::uniform(2, 1.0);
        REQUIRE_THROWS_AS(kinetic_energy(RadialProfile::constant(g, 1.0)), std::invalid_argument);
    }
}

TEST_CASE("trapezoid rule is exact on linear integrands", "[norms][property]") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 16 + static_cast<int>((uni(rng) + 2.0) * 500);
        const double rmax = 0.5 + (uni(rng) + 2.0);
        const auto g = RadialGrid::uniform(n, rmax);
        const double a = uni(rng), b = uni(rng);
        std::vector<double> f(n);
        for (int i = 0; i < n; ++i)
            f[i] = a + b * g.nodes[i];
        const double exact = a * rmax + 0.5 * b * rmax * rmax;
        REQUIRE(integrate(g, f) == Catch::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("norms converge at second order under refinement", "[norms]") {
    auto norm_at = [](int n, auto&& norm_fn) {
        const auto g = RadialGrid::uniform(n, 2.0);
        const auto p = RadialProfile::from_function(g, [](double r) { return std::exp(-r); });
        return norm_fn(p);
    };
    auto order = [&](auto&& fn) {
        const double c = norm_at(513, fn), f = norm_at(1025, fn), ff = norm_at(2049, fn);
        return std::log2(std::abs(c - f) / std::abs(f - ff));
    };
    REQUIRE(order([](const RadialProfile& p) { return l2_norm(p); }) >= 1.9);
    REQUIRE(order([](const RadialProfile& p) { return l1_norm(p); }) >= 1.9);
    REQUIRE(order([](const RadialProfile& p) { return kinetic_energy(p); }) >= 1.9);
}

TEST_CASE("norm homogeneity in the amplitude", "[norms][property]") {
    const auto g = RadialGrid::uniform(801, 1.7);
    const auto p = oracle::smooth_random_profile(g, 5);
    const double l1 = l1_norm(p), l2 = l2_norm(p), kin = kinetic_energy(p);
    for (double c : {0.0, 0.7, 2.3}) {
        RadialProfile q = p;
        for (auto& x : q.values)
            x *= c;
        REQUIRE(l1_norm(q) == Catch::Approx(c * l1).margin(1e-13));
        REQUIRE(l2_norm(q) == Catch::Approx(c * l2).margin(1e-13));
        REQUIRE(kinetic_energy(q) == Catch::Approx(c * c * kin).margin(1e-13));
    }
}

TEST_CASE("energy breakdown identities", "[norms]") {
    const auto g = RadialGrid::uniform(1025, 2.0);

    SECTION("zero profile") {
        const auto e = evaluate_functional(RadialProfile::zero(g), 1.0);
        REQUIRE(e.total == 0.0);
        REQUIRE(e.composite == 0.0);
    }
    SECTION("constant profile, beta = 2") {
        const auto g1 = RadialGrid::uniform(8193, 1.0);
        const auto e = evaluate_functional(RadialProfile::constant(g1, 1.0), 2.0);
        REQUIRE(e.total == Catch::Approx(2.0 * four_pi / 3.0).epsilon(1e-7));
    }
    SECTION("beta must be positive") {
        REQUIRE_THROWS_AS(evaluate_functional(RadialProfile::constant(g, 1.0), 0.0),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(evaluate_functional(RadialProfile::constant(g, 1.0), -1.0),
                          std::invalid_argument);
    }
    SECTION("composite and h1 identities on random profiles") {
        for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
            const auto p = oracle::smooth_random_profile(g, seed);
            const auto e = evaluate_functional(p, 1.3);
            REQUIRE(e.total == e.kinetic + 1.3 * e.l1);
            REQUIRE(e.composite * e.composite - e.h1 * e.h1 - e.l1 * e.l1 ==
                    Catch::Approx(0.0).margin(1e-12 * e.composite * e.composite));
            REQUIRE(e.h1 * e.h1 - e.l2 * e.l2 - 2.0 * e.kinetic ==
                    Catch::Approx(0.0).margin(1e-12 * e.h1 * e.h1));
        }
    }
    SECTION("functional scales as beta^{4/7} on minimizers") {
        const double b0 = 1.0, b1 = std::pow(2.0, 7.0 / 4.0);
        auto total_for = [](double beta) {
            const auto params = solve_parameters(beta);
            const auto grid = RadialGrid::uniform(4096, 1.5 * params.R);
            return evaluate_functional(sample(params, grid), beta).total;
        };
        REQUIRE(total_for(b1) / total_for(b0) == Catch::Approx(2.0).epsilon(1e-9));
    }
}
