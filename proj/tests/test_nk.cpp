#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "octo/nk.hpp"
#include "octo/problem.hpp"

using namespace octo;

namespace {

std::vector<std::uint8_t> genome_from_index(unsigned long long idx, int n) {
    std::vector<std::uint8_t> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = (idx >> i) & 1ULL;
    return g;
}

// Steepest-ascent single-bit-flip hill climb, used as an oracle cross-check.
double hill_climb_from(const NkLandscape& nk, std::vector<std::uint8_t> genome) {
    double current = nk.fitness(genome);
    for (;;) {
        double best_gain = 0.0;
        int best_bit = -1;
        for (int i = 0; i < nk.n(); ++i) {
            genome[static_cast<std::size_t>(i)] ^= 1;
            const double f = nk.fitness(genome);
            genome[static_cast<std::size_t>(i)] ^= 1;
            if (f - current > best_gain) {
                best_gain = f - current;
                best_bit = i;
            }
        }
        if (best_bit < 0) return current;
        genome[static_cast<std::size_t>(best_bit)] ^= 1;
        current += best_gain;
    }
}

}  // namespace

TEST_CASE("generation is seed-deterministic") {
    const auto a = NkLandscape::generate(16, 3, 99);
    const auto b = NkLandscape::generate(16, 3, 99);
    Rng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint8_t> g(16);
        for (auto& bit : g) bit = rng.coin(0.5);
        CHECK(a.fitness(g) == b.fitness(g));
    }
    const auto c = NkLandscape::generate(16, 3, 100);
    CHECK(a.neighbors() != c.neighbors());
}

TEST_CASE("neighbor tables are valid") {
    const auto nk = NkLandscape::generate(30, 4, 5);
    for (int i = 0; i < nk.n(); ++i) {
        const auto& row = nk.neighbors()[static_cast<std::size_t>(i)];
        CHECK(row.size() == 4);
        for (int v : row) {
            CHECK(v != i);
            CHECK(v >= 0);
            CHECK(v < nk.n());
        }
        auto sorted = row;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
    CHECK_THROWS_AS(NkLandscape::generate(5, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(NkLandscape::generate(5, -1, 1), std::invalid_argument);
}

TEST_CASE("fitness stays in [0,1) across the canonical configurations") {
    for (const auto& config : nk_benchmark_configs()) {
        const auto nk = NkLandscape::generate(config.n, config.k, 7);
        Rng rng(config.n);
        for (int trial = 0; trial < 10000; ++trial) {
            std::vector<std::uint8_t> g(static_cast<std::size_t>(config.n));
            for (auto& bit : g) bit = rng.coin(0.5);
            const double f = nk.fitness(g);
            CHECK(f >= 0.0);
            CHECK(f < 1.0);
        }
    }
}

TEST_CASE("k = 0 landscapes are additive with a per-locus argmax optimum") {
    const auto nk = NkLandscape::generate(10, 0, 3);
    std::vector<std::uint8_t> per_locus(10);
    for (int i = 0; i < 10; ++i) {
        const auto& row = nk.contributions()[static_cast<std::size_t>(i)];
        per_locus[static_cast<std::size_t>(i)] = row[1] > row[0] ? 1 : 0;
    }
    double best = -1.0;
    for (unsigned long long idx = 0; idx < 1024; ++idx)
        best = std::max(best, nk.fitness(genome_from_index(idx, 10)));
    CHECK(nk.fitness(per_locus) == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("single-locus table lookup") {
    const auto nk = NkLandscape::from_json(
        R"({"n":1,"k":0,"seed":0,"neighbors":[[]],"contributions":[[0.3,0.8]]})");
    CHECK(nk.fitness(std::vector<std::uint8_t>{0}) == 0.3);
    CHECK(nk.fitness(std::vector<std::uint8_t>{1}) == 0.8);
    CHECK_THROWS_AS(nk.fitness(std::vector<std::uint8_t>{0, 1}), std::invalid_argument);
}

TEST_CASE("an all-equal contribution table is flat") {
    const auto nk = NkLandscape::from_json(
        R"({"n":2,"k":1,"seed":0,"neighbors":[[1],[0]],
            "contributions":[[0.4,0.4,0.4,0.4],[0.4,0.4,0.4,0.4]]})");
    for (unsigned long long idx = 0; idx < 4; ++idx)
        CHECK(nk.fitness(genome_from_index(idx, 2)) == doctest::Approx(0.4));
}

TEST_CASE("fitness matches an independent re-implementation") {
    const auto nk = NkLandscape::generate(8, 3, 41);
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> g(8);
        for (auto& bit : g) bit = rng.coin(0.5);
        // Straightforward recomputation from the public tables.
        double total = 0.0;
        for (int i = 0; i < 8; ++i) {
            std::size_t idx = g[static_cast<std::size_t>(i)];
            for (int nb : nk.neighbors()[static_cast<std::size_t>(i)])
                idx = idx * 2 + g[static_cast<std::size_t>(nb)];
            total += nk.contributions()[static_cast<std::size_t>(i)][idx];
        }
        CHECK(nk.fitness(g) == doctest::Approx(total / 8.0).epsilon(1e-15));
    }
}

TEST_CASE("exhaustive optimum agrees with hill climbing from every start") {
    const auto nk = NkLandscape::generate(12, 2, 123);
    double exhaustive = -1.0;
    for (unsigned long long idx = 0; idx < 4096; ++idx)
        exhaustive = std::max(exhaustive, nk.fitness(genome_from_index(idx, 12)));
    double climbed = -1.0;
    for (unsigned long long idx = 0; idx < 4096; ++idx)
        climbed = std::max(climbed, hill_climb_from(nk, genome_from_index(idx, 12)));
    CHECK(climbed == doctest::Approx(exhaustive).epsilon(1e-12));
}

TEST_CASE("json round trips with and without explicit tables") {
    const auto nk = NkLandscape::generate(9, 2, 77);
    const auto with_tables = NkLandscape::from_json(nk.to_json(true));
    const auto regenerated = NkLandscape::from_json(nk.to_json(false));
    CHECK(with_tables.neighbors() == nk.neighbors());
    CHECK(with_tables.contributions() == nk.contributions());
    CHECK(regenerated.neighbors() == nk.neighbors());
    CHECK(regenerated.contributions() == nk.contributions());
}

TEST_CASE("sigmoid binarization thresholds at zero with ties to zero") {
    CHECK(binarize_sigmoid(std::vector<double>{-1.0, 0.0, 1.0}) ==
          std::vector<std::uint8_t>{0, 0, 1});
    CHECK(binarize_sigmoid(std::vector<double>(4, 0.0)) == std::vector<std::uint8_t>{0, 0, 0, 0});

    // Positive scaling never changes the genome.
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(6);
        for (auto& v : x) v = rng.uniform(-5.0, 5.0);
        const auto bits = binarize_sigmoid(x);
        for (double scale : {0.001, 0.5, 3.0, 1000.0}) {
            auto scaled = x;
            for (auto& v : scaled) v *= scale;
            CHECK(binarize_sigmoid(scaled) == bits);
        }
    }
}

TEST_CASE("the nk problem wires both views consistently") {
    auto nk = std::make_shared<NkLandscape>(NkLandscape::generate(12, 2, 9));
    const Problem problem = nk_problem(nk, "nk-test");
    CHECK(problem.direction == Direction::Maximize);
    CHECK(problem.binary_length == 12);
    CHECK(problem.space.dimension() == 12);
    CHECK(problem.space.lower()[0] == -5.0);
    CHECK(problem.space.upper()[0] == 5.0);

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(12);
        for (auto& v : x) v = rng.uniform(-5.0, 5.0);
        const auto bits = binarize_sigmoid(x);
        CHECK(problem.fn(x) == nk->fitness(bits));
        CHECK(problem.binary_fn(bits) == nk->fitness(bits));
    }

    const Objective view = minimizing_view(problem);
    std::vector<double> x(12, 1.0);
    CHECK(view.continuous(x) == -problem.fn(x));
}
