#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "octo/baselines.hpp"
#include "octo/harness.hpp"
#include "octo/nk.hpp"
#include "octo/problem.hpp"

using namespace octo;

namespace {

// Count-the-ones problem (maximize), exposed both natively and through the
// sigmoid transfer.
Problem onemax_problem(int n) {
    Problem p{"onemax-" + std::to_string(n),
              SearchSpace::cube(static_cast<std::size_t>(n), -5.0, 5.0),
              Direction::Maximize,
              static_cast<double>(n),
              std::vector<double>(static_cast<std::size_t>(n), 5.0),
              nullptr};
    p.fn = [](std::span<const double> x) {
        double ones = 0.0;
        for (double v : x) ones += v > 0.0 ? 1.0 : 0.0;
        return ones;
    };
    p.binary_length = static_cast<std::size_t>(n);
    p.binary_fn = [](std::span<const std::uint8_t> g) {
        double ones = 0.0;
        for (auto b : g) ones += b;
        return ones;
    };
    return p;
}

}  // namespace

TEST_CASE("algorithm names parse both ways") {
    CHECK(parse_baseline("de") == BaselineAlgorithm::DE);
    CHECK(baseline_name(BaselineAlgorithm::PSO) == "pso");
    CHECK_THROWS_AS(parse_baseline("woa"), std::invalid_argument);
}

TEST_CASE("hill climbing solves onemax") {
    const Problem p = onemax_problem(10);
    BaselineConfig cfg;
    cfg.algorithm = BaselineAlgorithm::HC;
    const auto record = run_baseline(cfg, minimizing_view(p), 1000, 3);
    CHECK(record.final_fitness == -10.0);  // all ones, negated internally
    CHECK(record.evaluations == 1000);
}

TEST_CASE("sa temperature follows the geometric schedule") {
    CHECK(sa_temperature(100.0, 0.99, 0) == 100.0);
    CHECK(sa_temperature(100.0, 0.99, 1) == doctest::Approx(99.0));
    CHECK(sa_temperature(100.0, 0.99, 2) == doctest::Approx(98.01));
    CHECK(sa_temperature(100.0, 0.99, 100) == doctest::Approx(100.0 * std::pow(0.99, 100)));
}

TEST_CASE("sa acceptance converges to hill climbing as temperature vanishes") {
    SUBCASE("improving moves are always accepted") {
        Rng rng(1);
        for (int i = 0; i < 1000; ++i) CHECK(sa_accept(-0.5, 1e-12, rng));
        for (int i = 0; i < 1000; ++i) CHECK(sa_accept(0.0, 50.0, rng));
    }
    SUBCASE("worsening acceptance frequency goes to zero") {
        Rng rng(2);
        int accepted = 0;
        for (int i = 0; i < 10000; ++i)
            if (sa_accept(1.0, 1e-9, rng)) ++accepted;
        CHECK(accepted == 0);
    }
    SUBCASE("at moderate temperature the Metropolis rate is matched") {
        Rng rng(3);
        int accepted = 0;
        const int n = 20000;
        for (int i = 0; i < n; ++i)
            if (sa_accept(1.0, 2.0, rng)) ++accepted;
        const double expected = std::exp(-0.5);
        CHECK(std::fabs(static_cast<double>(accepted) / n - expected) < 0.02);
    }
}

TEST_CASE("degenerate de only revisits initial points") {
    const Problem p = continuous_suite("sphere", 4);
    BaselineConfig cfg;
    cfg.algorithm = BaselineAlgorithm::DE;
    cfg.de_weight = 0.0;
    cfg.de_crossover = 1.0;

    std::vector<std::vector<double>> seen;
    Objective view = minimizing_view(p);
    const ObjectiveFn inner = view.continuous;
    view.continuous = [&seen, inner](std::span<const double> x) {
        seen.emplace_back(x.begin(), x.end());
        return inner(x);
    };
    run_baseline(cfg, view, 500, 5);
    REQUIRE(seen.size() == 500);
    // With F = 0 and CR = 1 every trial equals some base vector from the
    // initial population.
    for (std::size_t i = 50; i < seen.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < 50; ++j)
            if (seen[i] == seen[j]) found = true;
        CHECK(found);
    }
}

TEST_CASE("ga recovers near-optimal nk fitness") {
    // Brute-force oracle on (N=12, K=2): the GA mean over 10 seeds must land
    // within [best - 0.05, best].
    auto nk = std::make_shared<NkLandscape>(NkLandscape::generate(12, 2, 2024));
    double best = -1.0;
    for (unsigned long long idx = 0; idx < 4096; ++idx) {
        std::vector<std::uint8_t> g(12);
        for (int i = 0; i < 12; ++i) g[static_cast<std::size_t>(i)] = (idx >> i) & 1ULL;
        best = std::max(best, nk->fitness(g));
    }

    const Problem p = nk_problem(nk, "nk-12-2");
    BaselineConfig cfg;
    cfg.algorithm = BaselineAlgorithm::GA;
    double mean = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto record = run_baseline(cfg, minimizing_view(p), 2000, seed);
        mean += -record.final_fitness;  // back to maximization units
    }
    mean /= 10.0;
    CHECK(mean <= best + 1e-12);
    CHECK(mean >= best - 0.05);
}

TEST_CASE("binary problems reach hc and ga through the native bit view") {
    const Problem p = onemax_problem(16);
    Objective view = minimizing_view(p);
    long long continuous_calls = 0, binary_calls = 0;
    const ObjectiveFn inner_c = view.continuous;
    const BinaryObjectiveFn inner_b = view.binary;
    view.continuous = [&](std::span<const double> x) { ++continuous_calls; return inner_c(x); };
    view.binary = [&](std::span<const std::uint8_t> g) { ++binary_calls; return inner_b(g); };

    BaselineConfig cfg;
    for (auto algorithm : {BaselineAlgorithm::HC, BaselineAlgorithm::SA, BaselineAlgorithm::GA}) {
        cfg.algorithm = algorithm;
        continuous_calls = binary_calls = 0;
        run_baseline(cfg, view, 300, 9);
        CHECK(continuous_calls == 0);
        CHECK(binary_calls == 300);
    }
    for (auto algorithm : {BaselineAlgorithm::DE, BaselineAlgorithm::PSO}) {
        cfg.algorithm = algorithm;
        continuous_calls = binary_calls = 0;
        run_baseline(cfg, view, 300, 9);
        CHECK(continuous_calls == 300);
        CHECK(binary_calls == 0);
    }
}

TEST_CASE("shared optimizer contract: budget, bounds, monotonicity, determinism") {
    const Problem continuous = continuous_suite("rastrigin", 5);
    const Problem binary = onemax_problem(12);
    OioConfig oio_cfg;
    oio_cfg.num_tentacles = 2;
    oio_cfg.suckers_per_tentacle = 10;
    oio_cfg.iterations_per_tentacle = 30;
    BaselineConfig base_cfg;

    for (const std::string& algorithm : default_algorithms()) {
        for (const Problem* problem : {&continuous, &binary}) {
            CAPTURE(algorithm);
            CAPTURE(problem->id);

            // Bound containment, observed through a wrapping assertion oracle.
            Problem checked = *problem;
            long long violations = 0;
            const ObjectiveFn inner = checked.fn;
            checked.fn = [&violations, inner, space = &checked.space](std::span<const double> x) {
                if (!space->contains(x)) ++violations;
                return inner(x);
            };

            const auto a = run_single(algorithm, checked, 400, 77, oio_cfg, base_cfg);
            const auto b = run_single(algorithm, checked, 400, 77, oio_cfg, base_cfg);
            CHECK(violations == 0);

            // Budget exactness.
            CHECK(a.evaluations == 400);
            CHECK_FALSE(a.budget_fault);
            CHECK(a.trace.back().evaluations == 400);

            // Trace monotonicity.
            for (std::size_t i = 1; i < a.trace.size(); ++i) {
                CHECK(a.trace[i].evaluations > a.trace[i - 1].evaluations);
                CHECK(a.trace[i].best <= a.trace[i - 1].best);
            }
            CHECK(a.final_fitness == a.trace.back().best);

            // Seed determinism (wall time aside).
            CHECK(a.final_fitness == b.final_fitness);
            CHECK(a.trace == b.trace);
            CHECK(a.seed == b.seed);
        }
    }
}

TEST_CASE("baseline budgets below the population are rejected") {
    const Problem p = continuous_suite("sphere", 3);
    BaselineConfig cfg;
    cfg.algorithm = BaselineAlgorithm::DE;
    CHECK_THROWS_AS(run_baseline(cfg, minimizing_view(p), 10, 1), std::invalid_argument);
}
