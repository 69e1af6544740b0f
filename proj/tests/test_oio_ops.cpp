#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "octo/oio.hpp"

using namespace octo;

namespace {

SuckerState make_sucker(std::vector<double> position) {
    SuckerState s;
    s.velocity.assign(position.size(), 0.0);
    s.personal_best = position;
    s.position = std::move(position);
    s.personal_best_fitness = 0.0;
    return s;
}

}  // namespace

TEST_CASE("energy is zero at the final iteration and two at the endpoint") {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        Rng rng(seed);
        CHECK(compute_energy(100, 100, rng) == 0.0);
    }
    CHECK(energy_at(1.0, 0, 100) == 2.0);
    CHECK(energy_at(-1.0, 0, 100) == -2.0);
}

TEST_CASE("energy magnitude is bounded by the decay envelope") {
    Rng rng(4);
    for (long long t = 0; t <= 100; ++t) {
        const double e = compute_energy(t, 100, rng);
        CHECK(std::fabs(e) <= 2.0 * (1.0 - t / 100.0) + 1e-12);
    }
}

TEST_CASE("energy replays under a fixed seed and rejects t_max = 0") {
    Rng a(123), b(123);
    CHECK(compute_energy(50, 100, a) == compute_energy(50, 100, b));
    Rng rng(1);
    CHECK_THROWS_AS(compute_energy(0, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(energy_at(0.5, 0, 0), std::invalid_argument);
}

TEST_CASE("levy exploration with zero step scale returns the peer") {
    const SearchSpace space = SearchSpace::cube(3, -10.0, 10.0);
    OioConfig cfg;
    cfg.levy_alpha = 0.0;
    const auto self = make_sucker({1.0, 2.0, 3.0});
    const auto peer = make_sucker({-4.0, 0.5, 9.0});
    Rng rng(8);
    CHECK(explore_levy(self, peer, space, cfg, rng) == peer.position);
}

TEST_CASE("levy exploration vanishes at the origin") {
    const SearchSpace space = SearchSpace::cube(4, -1.0, 1.0);
    OioConfig cfg;
    const auto zero = make_sucker({0.0, 0.0, 0.0, 0.0});
    Rng rng(17);
    const auto candidate = explore_levy(zero, zero, space, cfg, rng);
    CHECK(candidate == std::vector<double>(4, 0.0));
}

TEST_CASE("levy exploration matches an independent Mantegna re-implementation") {
    const SearchSpace space = SearchSpace::cube(2, -100.0, 100.0);
    OioConfig cfg;  // alpha 0.01, beta 1.5
    const auto self = make_sucker({3.0, -7.0});
    const auto peer = make_sucker({-20.0, 11.0});

    Rng rng(2024);
    const auto candidate = explore_levy(self, peer, space, cfg, rng);

    // Reference: Mantegna sampling written out from the textbook formulas,
    // replaying the same substream.
    Rng ref(2024);
    const double beta = cfg.levy_beta;
    const double u_scalar = ref.uniform();
    const double sigma_u = std::pow(
        std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0) /
            (std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0)),
        1.0 / beta);
    std::vector<double> expected(2);
    for (std::size_t d = 0; d < 2; ++d) {
        const double gauss_u = sigma_u * ref.normal();
        const double gauss_v = ref.normal();
        const double step = gauss_u / std::pow(std::fabs(gauss_v), 1.0 / beta);
        expected[d] = peer.position[d] +
                      cfg.levy_alpha * step * (peer.position[d] - 2.0 * u_scalar * self.position[d]);
        expected[d] = std::clamp(expected[d], -100.0, 100.0);
    }
    CHECK(candidate == expected);
}

TEST_CASE("elite exploration is exact at zero noise and deterministic with one entry") {
    const SearchSpace space = SearchSpace::cube(3, 0.0, 1.0);
    OioConfig cfg;
    cfg.elite_noise_sigma = 0.0;
    EliteMemory elite(4);
    elite.offer({0.25, 0.5, 0.75}, 1.0);
    Rng rng(5);
    const auto candidate = explore_elite(elite, space, cfg, rng);
    REQUIRE(candidate.has_value());
    CHECK(*candidate == elite.entry(0).position);
}

TEST_CASE("elite exploration signals fallback on an empty memory") {
    const SearchSpace space = SearchSpace::cube(2, 0.0, 1.0);
    OioConfig cfg;
    EliteMemory elite(4);
    Rng rng(5);
    CHECK_FALSE(explore_elite(elite, space, cfg, rng).has_value());
}

TEST_CASE("elite noise has the configured spread") {
    // Law of large numbers: with sigma = 0.1 on a unit range, the sample mean
    // of 10^4 draws sits within 0.01 of the elite point per dimension.
    const SearchSpace space = SearchSpace::cube(2, -10.0, -9.0);  // unit range away from zero
    OioConfig cfg;                                                // sigma 0.1
    EliteMemory elite(4);
    const std::vector<double> center = {-9.5, -9.4};
    elite.offer(center, 1.0);
    Rng rng(77);
    double sum[2] = {0.0, 0.0};
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const auto c = explore_elite(elite, space, cfg, rng);
        sum[0] += (*c)[0];
        sum[1] += (*c)[1];
    }
    CHECK(std::fabs(sum[0] / n - center[0]) < 0.01);
    CHECK(std::fabs(sum[1] / n - center[1]) < 0.01);
}

TEST_CASE("pso update degenerates correctly") {
    const SearchSpace space = SearchSpace::cube(2, -100.0, 100.0);
    Rng rng(3);

    SUBCASE("all coefficients zero freezes the sucker") {
        OioConfig cfg;
        cfg.inertia = cfg.c1 = cfg.c2 = cfg.c3 = 0.0;
        auto s = make_sucker({4.0, -2.0});
        s.velocity = {1.0, 1.0};
        const auto move = exploit_pso(s, {0.0, 0.0}, {0.0, 0.0}, space, cfg, rng);
        CHECK(move.velocity == std::vector<double>{0.0, 0.0});
        CHECK(move.position == s.position);
    }

    SUBCASE("consensus point is stationary") {
        OioConfig cfg;
        auto s = make_sucker({1.5, 2.5});
        const auto move = exploit_pso(s, s.position, s.position, space, cfg, rng);
        CHECK(move.velocity == std::vector<double>{0.0, 0.0});
        CHECK(move.position == s.position);
    }

    SUBCASE("pure inertia translates by the velocity") {
        OioConfig cfg;
        cfg.inertia = 1.0;
        cfg.c1 = cfg.c2 = cfg.c3 = 0.0;
        auto s = make_sucker({0.0, 0.0});
        s.velocity = {1.0, 0.0};
        const auto move = exploit_pso(s, {0.0, 0.0}, {0.0, 0.0}, space, cfg, rng);
        CHECK(move.velocity == std::vector<double>{1.0, 0.0});
        CHECK(move.position == std::vector<double>{1.0, 0.0});
    }
}

TEST_CASE("energy pull lands on the global best at zero energy or zero gap") {
    const SearchSpace space = SearchSpace::cube(2, -100.0, 100.0);
    const std::vector<double> gbest = {1.0, 1.0};
    auto s = make_sucker({0.0, 3.0});
    CHECK(exploit_energy_pull(s, gbest, 0.0, space) == gbest);
    auto at_best = make_sucker(gbest);
    CHECK(exploit_energy_pull(at_best, gbest, 0.7, space) == gbest);
}

TEST_CASE("energy pull hand-computed case") {
    // G = (1,1), S = (0,3), E = 0.5: |G-S| = (1,2), S' = (1,1) - (0.5,1) = (0.5,0).
    const SearchSpace space = SearchSpace::cube(2, -100.0, 100.0);
    auto s = make_sucker({0.0, 3.0});
    CHECK(exploit_energy_pull(s, {1.0, 1.0}, 0.5, space) == std::vector<double>{0.5, 0.0});
}

TEST_CASE("tentacle aggregation tracks the minimum and the stagnation counter") {
    TentacleState tentacle;
    tentacle.suckers.resize(3);
    tentacle.suckers[0].personal_best = {0.0};
    tentacle.suckers[1].personal_best = {1.0};
    tentacle.suckers[2].personal_best = {2.0};

    SUBCASE("minimum of a small set") {
        tentacle.suckers[0].personal_best_fitness = 0.3;
        tentacle.suckers[1].personal_best_fitness = 0.2;
        tentacle.suckers[2].personal_best_fitness = 0.9;
        CHECK(update_tentacle_best(tentacle));
        CHECK(tentacle.local_best_fitness == 0.2);
        CHECK(tentacle.local_best == std::vector<double>{1.0});
        CHECK(tentacle.stagnation == 0);
    }

    SUBCASE("no strict improvement increments stagnation") {
        for (auto& s : tentacle.suckers) s.personal_best_fitness = 1.0;
        tentacle.local_best_fitness = 1.0;
        tentacle.stagnation = 3;
        CHECK_FALSE(update_tentacle_best(tentacle));
        CHECK(tentacle.stagnation == 4);
    }

    SUBCASE("strict improvement resets stagnation") {
        tentacle.local_best_fitness = 1.0;
        tentacle.stagnation = 4;
        tentacle.suckers[0].personal_best_fitness = 0.5;
        tentacle.suckers[1].personal_best_fitness = 1.0;
        tentacle.suckers[2].personal_best_fitness = 1.0;
        CHECK(update_tentacle_best(tentacle));
        CHECK(tentacle.local_best_fitness == 0.5);
        CHECK(tentacle.stagnation == 0);
    }
}

TEST_CASE("regeneration triggers strictly above the threshold") {
    const SearchSpace space = SearchSpace::cube(3, -2.0, 2.0);
    OioConfig cfg;
    cfg.stagnation_threshold = 5;
    cfg.suckers_per_tentacle = 4;

    TentacleState tentacle;
    tentacle.center = {9.0, 9.0, 9.0};
    tentacle.radius = 0.1;
    tentacle.local_best = {1.0, 1.0, 1.0};
    tentacle.local_best_fitness = 0.4;
    tentacle.suckers.resize(4);
    for (auto& s : tentacle.suckers) {
        s.position = {1.0, 1.0, 1.0};
        s.velocity = {0.5, 0.5, 0.5};
        s.personal_best = s.position;
        s.personal_best_fitness = 0.4;
    }

    SUBCASE("at the threshold nothing happens") {
        tentacle.stagnation = 5;
        Rng rng(1);
        CHECK_FALSE(check_and_regenerate(tentacle, space, cfg, rng));
        CHECK(tentacle.center == std::vector<double>{9.0, 9.0, 9.0});
        CHECK(tentacle.stagnation == 5);
    }

    SUBCASE("above the threshold the tentacle is rebuilt inside the bounds") {
        tentacle.stagnation = 6;
        Rng rng(1);
        CHECK(check_and_regenerate(tentacle, space, cfg, rng));
        CHECK(tentacle.stagnation == 0);
        CHECK(space.contains(tentacle.center));
        CHECK(tentacle.local_best_fitness == std::numeric_limits<double>::infinity());
        for (const auto& s : tentacle.suckers) {
            CHECK(space.contains(s.position));
            CHECK(s.velocity == std::vector<double>(3, 0.0));
            CHECK(s.personal_best_fitness == std::numeric_limits<double>::infinity());
        }
    }

    SUBCASE("resampled center replays bit-identically") {
        tentacle.stagnation = 6;
        auto copy = tentacle;
        Rng a(99), b(99);
        check_and_regenerate(tentacle, space, cfg, a);
        check_and_regenerate(copy, space, cfg, b);
        CHECK(tentacle.center == copy.center);
        for (std::size_t j = 0; j < tentacle.suckers.size(); ++j)
            CHECK(tentacle.suckers[j].position == copy.suckers[j].position);
    }
}

TEST_CASE("elite memory keeps the best-k offers") {
    SUBCASE("first offer is stored") {
        EliteMemory elite(8);
        CHECK(elite.offer({1.0, 2.0}, 0.5));
        CHECK(elite.size() == 1);
        CHECK(elite.entry(0).fitness == 0.5);
    }

    SUBCASE("a full memory rejects a worse candidate") {
        EliteMemory elite(2);
        elite.offer({0.0}, 0.1);
        elite.offer({1.0}, 0.2);
        CHECK_FALSE(elite.offer({2.0}, 0.9));
        CHECK(elite.size() == 2);
        CHECK(elite.entry(1).fitness == 0.2);
    }

    SUBCASE("identical positions are rejected") {
        EliteMemory elite(4);
        CHECK(elite.offer({3.0, 4.0}, 0.7));
        CHECK_FALSE(elite.offer({3.0, 4.0}, 0.7));
        CHECK(elite.size() == 1);
    }

    SUBCASE("20 random offers reduce to the brute-force best 8") {
        EliteMemory elite(8);
        Rng rng(31);
        std::vector<std::pair<std::vector<double>, double>> archive;
        for (int i = 0; i < 20; ++i) {
            std::vector<double> pos = {rng.uniform(), rng.uniform()};
            const double fit = rng.uniform();
            archive.push_back({pos, fit});
            elite.offer(pos, fit);
        }
        std::sort(archive.begin(), archive.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        REQUIRE(elite.size() == 8);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(elite.entry(i).fitness == archive[i].second);
            CHECK(elite.entry(i).position == archive[i].first);
        }
    }
}

TEST_CASE("population diversity is normalized to [0, 1]") {
    const SearchSpace space = SearchSpace::cube(2, 0.0, 2.0);
    OctopusState state;
    state.tentacles.resize(1);

    SUBCASE("coincident suckers have zero diversity") {
        state.tentacles[0].suckers.resize(3);
        for (auto& s : state.tentacles[0].suckers) s.position = {1.0, 1.0};
        CHECK(population_diversity(state, space) == 0.0);
    }

    SUBCASE("opposite corners reach one") {
        state.tentacles[0].suckers.resize(2);
        state.tentacles[0].suckers[0].position = {0.0, 0.0};
        state.tentacles[0].suckers[1].position = {2.0, 2.0};
        CHECK(population_diversity(state, space) == doctest::Approx(1.0));
    }

    SUBCASE("matches a brute-force double loop on random positions") {
        Rng rng(6);
        state.tentacles[0].suckers.resize(5);
        std::vector<std::vector<double>> pts;
        for (auto& s : state.tentacles[0].suckers) {
            s.position = {rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0)};
            pts.push_back(s.position);
        }
        double sum = 0.0;
        int pairs = 0;
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = 0; b < pts.size(); ++b)
                if (a < b) {
                    const double dx = pts[a][0] - pts[b][0];
                    const double dy = pts[a][1] - pts[b][1];
                    sum += std::sqrt(dx * dx + dy * dy);
                    ++pairs;
                }
        const double expected = sum / pairs / std::sqrt(8.0);
        CHECK(population_diversity(state, space) == doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("fewer than two suckers is an invalid state") {
        state.tentacles[0].suckers.resize(1);
        state.tentacles[0].suckers[0].position = {0.0, 0.0};
        CHECK_THROWS_AS(population_diversity(state, space), std::logic_error);
    }
}
