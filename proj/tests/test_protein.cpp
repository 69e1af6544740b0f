#include "doctest.h"

#include <cmath>
#include <sstream>

#include "octo/protein.hpp"

using namespace octo;

TEST_CASE("argmax decode of an all-zero vector gives the first residue everywhere") {
    const ProteinCodec codec(4);
    const std::vector<double> internal(4 * 20, 0.0);
    CHECK(codec.decode(internal) == "AAAA");
}

TEST_CASE("softmax rows are uniform for constant scores and always sum to one") {
    const ProteinCodec codec(3);
    std::vector<double> internal(3 * 20, 2.5);
    const auto matrix = codec.softmax_matrix(internal);
    for (const auto& row : matrix) {
        double sum = 0.0;
        for (double v : row) {
            CHECK(v == doctest::Approx(0.05).epsilon(1e-12));
            sum += v;
        }
        CHECK(std::fabs(sum - 1.0) < 1e-9);
    }

    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        for (auto& v : internal) v = rng.uniform(-50.0, 50.0);
        for (const auto& row : codec.softmax_matrix(internal)) {
            double sum = 0.0;
            for (double v : row) sum += v;
            CHECK(std::fabs(sum - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("a saturated row dominates sampling") {
    const ProteinCodec codec(1, DecodeMode::Sample);
    std::vector<double> internal(20, 0.0);
    internal[kAminoAcids.find('W')] = 100.0;
    Rng rng(9);
    for (int draw = 0; draw < 1000; ++draw) CHECK(codec.decode(internal, &rng) == "W");
}

TEST_CASE("argmax decode ignores per-row constant offsets and breaks ties low") {
    const ProteinCodec codec(2);
    Rng rng(4);
    std::vector<double> internal(2 * 20);
    for (auto& v : internal) v = rng.uniform(-3.0, 3.0);
    const std::string base = codec.decode(internal);
    auto offset = internal;
    for (std::size_t j = 0; j < 20; ++j) offset[j] += 7.5;          // row 0
    for (std::size_t j = 20; j < 40; ++j) offset[j] -= 2.25;        // row 1
    CHECK(codec.decode(offset) == base);

    std::vector<double> tied(20, 1.0);
    CHECK(ProteinCodec(1).decode(tied) == "A");
}

TEST_CASE("length mismatches are rejected") {
    const ProteinCodec codec(3);
    CHECK_THROWS_AS(codec.decode(std::vector<double>(59, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(ProteinCodec(0), std::invalid_argument);
}

TEST_CASE("sequence tables load and answer exact lookups") {
    std::istringstream table(
        "sequence\tfitness\n"
        "ACDEF\t3.7\n");
    const auto landscape = load_empirical(table);
    CHECK(landscape.wild_type == "ACDEF");
    CHECK(landscape.fitness("ACDEF") == 3.7);
}

TEST_CASE("single mutants define additive effects") {
    std::istringstream table(
        "sequence\tfitness\n"
        "ACDEF\t3.0\n"
        "GCDEF\t3.5\n");
    const auto landscape = load_empirical(table);
    REQUIRE(landscape.single_effects.count({0, 'G'}) == 1);
    CHECK(landscape.single_effects.at({0, 'G'}) == 0.5);
    // The additive model reproduces the stored single mutant exactly.
    CHECK(landscape.wild_type_fitness + landscape.single_effects.at({0, 'G'}) == 3.5);
}

TEST_CASE("mutation notation builds sequences against the wild type") {
    std::istringstream table(
        "# wild_type: ACDEF\n"
        "mutations\tfitness\n"
        "WT\t3.0\n"
        "A1G\t3.5\n"
        "C2W\t2.8\n"
        "A1G:C2W\t3.1\n");
    const auto landscape = load_empirical(table);
    CHECK(landscape.wild_type_fitness == 3.0);
    CHECK(landscape.fitness("GCDEF") == 3.5);
    CHECK(landscape.fitness("AWDEF") == 2.8);
    CHECK(landscape.fitness("GWDEF") == 3.1);  // exact lookup wins over additive 3.3
}

TEST_CASE("additive fallback sums effects and penalizes unknown substitutions") {
    std::istringstream table(
        "# wild_type: ACDEF\n"
        "mutations\tfitness\n"
        "WT\t3.0\n"
        "A1G\t3.5\n"
        "C2W\t2.8\n");
    const auto landscape = load_empirical(table);
    // Double mutant absent from the table: 3.0 + 0.5 - 0.2 = 3.3.
    CHECK(landscape.fitness("GWDEF") == doctest::Approx(3.3).epsilon(1e-12));
    // Unknown substitution at position 3 contributes the default penalty.
    CHECK(landscape.fitness("ACWEF") == doctest::Approx(2.9).epsilon(1e-12));
    CHECK_THROWS_AS(landscape.fitness("ACDE"), std::invalid_argument);
}

TEST_CASE("three-mutant prediction matches a per-position summation oracle") {
    std::istringstream table(
        "# wild_type: AAAAA\n"
        "mutations\tfitness\n"
        "WT\t1.0\n"
        "A1C\t1.25\n"
        "A3W\t0.6\n"
        "A5Y\t1.9\n");
    const auto landscape = load_empirical(table);
    const double expected = 1.0 + (1.25 - 1.0) + (0.6 - 1.0) + (1.9 - 1.0);
    CHECK(landscape.fitness("CAWAY") == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("format errors carry line numbers") {
    SUBCASE("missing wild type in mutation mode") {
        std::istringstream table("mutations\tfitness\nA1G\t3.5\n");
        CHECK_THROWS_WITH_AS(load_empirical(table), doctest::Contains("line 2"), FormatError);
    }
    SUBCASE("non-numeric fitness") {
        std::istringstream table("sequence\tfitness\nACDEF\thigh\n");
        CHECK_THROWS_WITH_AS(load_empirical(table), doctest::Contains("line 2"), FormatError);
    }
    SUBCASE("bad mutation token") {
        std::istringstream table("# wild_type: ACDEF\nmutations\tfitness\nWT\t1.0\nA0G\t2.0\n");
        CHECK_THROWS_WITH_AS(load_empirical(table), doctest::Contains("line 4"), FormatError);
    }
    SUBCASE("wild-type residue mismatch") {
        std::istringstream table("# wild_type: ACDEF\nmutations\tfitness\nWT\t1.0\nC1G\t2.0\n");
        CHECK_THROWS_AS(load_empirical(table), FormatError);
    }
    SUBCASE("missing header") {
        std::istringstream table("ACDEF\t1.0\n");
        CHECK_THROWS_AS(load_empirical(table), FormatError);
    }
    SUBCASE("missing wild type fitness") {
        std::istringstream table("# wild_type: ACDEF\nmutations\tfitness\nA1G\t2.0\n");
        CHECK_THROWS_AS(load_empirical(table), FormatError);
    }
}

TEST_CASE("the protein problem decodes through the codec") {
    std::istringstream table(
        "sequence\tfitness\n"
        "AC\t1.0\n"
        "CC\t2.0\n");
    auto landscape = std::make_shared<EmpiricalLandscape>(load_empirical(table));
    const Problem p = protein_problem(landscape, "toy");
    CHECK(p.direction == Direction::Maximize);
    CHECK(p.space.dimension() == 40);

    // Scores pushing 'C' at position 0 and keeping 'C' at position 1 decode to "CC".
    std::vector<double> x(40, 0.0);
    x[kAminoAcids.find('C')] = 5.0;
    x[20 + kAminoAcids.find('C')] = 5.0;
    CHECK(p.fn(x) == 2.0);
}
