#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "octo/rng.hpp"

namespace octo {

// Kauffman NK fitness model: N binary loci, each epistatically coupled to K
// random other loci. Fitness is the mean of per-locus contribution lookups and
// lies in [0, 1); higher is better. Fully determined by (n, k, seed).
class NkLandscape {
  public:
    static NkLandscape generate(int n, int k, std::uint64_t seed);

    double fitness(std::span<const std::uint8_t> genome) const;

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<std::vector<int>>& neighbors() const { return neighbors_; }
    const std::vector<std::vector<double>>& contributions() const { return contributions_; }

    // JSON document for cross-implementation exchange: always carries
    // (n, k, seed); explicit tables are optional.
    std::string to_json(bool include_tables) const;
    static NkLandscape from_json(const std::string& text);

  private:
    NkLandscape() = default;

    int n_ = 0;
    int k_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::vector<int>> neighbors_;       // n rows of k distinct indices != self
    std::vector<std::vector<double>> contributions_;  // n rows of 2^(k+1) values in [0,1)
};

// Per-dimension sigmoid thresholding: bit d is 1 iff sigmoid(x[d]) > 0.5,
// i.e. iff x[d] > 0; the tie x[d] == 0 maps to 0.
std::vector<std::uint8_t> binarize_sigmoid(std::span<const double> x);

// The five canonical benchmark configurations, in increasing difficulty.
struct NkBenchmarkConfig {
    std::string name;
    int n;
    int k;
};
const std::vector<NkBenchmarkConfig>& nk_benchmark_configs();

}  // namespace octo
