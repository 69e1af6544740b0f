#include "octo/nk.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace octo {

using nlohmann::json;

NkLandscape NkLandscape::generate(int n, int k, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("NkLandscape: n must be >= 1");
    if (k < 0 || k >= n) throw std::invalid_argument("NkLandscape: k must satisfy 0 <= k < n");

    NkLandscape nk;
    nk.n_ = n;
    nk.k_ = k;
    nk.seed_ = seed;
    Rng rng(substream_seed({seed, fnv1a64("nk-tables")}));

    nk.neighbors_.resize(static_cast<std::size_t>(n));
    std::vector<int> others(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        // k distinct loci != i, via partial Fisher-Yates over the others.
        int w = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) others[static_cast<std::size_t>(w++)] = j;
        auto& row = nk.neighbors_[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(k));
        for (int m = 0; m < k; ++m) {
            const std::size_t pick = static_cast<std::size_t>(m) +
                                     rng.index(static_cast<std::size_t>(n - 1 - m));
            std::swap(others[static_cast<std::size_t>(m)], others[pick]);
            row[static_cast<std::size_t>(m)] = others[static_cast<std::size_t>(m)];
        }
    }

    const std::size_t table_width = std::size_t{1} << (k + 1);
    nk.contributions_.resize(static_cast<std::size_t>(n));
    for (auto& row : nk.contributions_) {
        row.resize(table_width);
        for (double& v : row) v = rng.uniform();
    }
    return nk;
}

double NkLandscape::fitness(std::span<const std::uint8_t> genome) const {
    if (genome.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("NkLandscape::fitness: genome length must equal n");
    double total = 0.0;
    for (int i = 0; i < n_; ++i) {
        // Table index: own bit first, then neighbor bits in stored order.
        std::size_t idx = genome[static_cast<std::size_t>(i)] ? 1 : 0;
        for (int neighbor : neighbors_[static_cast<std::size_t>(i)])
            idx = (idx << 1) | (genome[static_cast<std::size_t>(neighbor)] ? 1 : 0);
        total += contributions_[static_cast<std::size_t>(i)][idx];
    }
    return total / static_cast<double>(n_);
}

std::string NkLandscape::to_json(bool include_tables) const {
    json doc;
    doc["n"] = n_;
    doc["k"] = k_;
    doc["seed"] = seed_;
    if (include_tables) {
        doc["neighbors"] = neighbors_;
        doc["contributions"] = contributions_;
    }
    return doc.dump(2);
}

NkLandscape NkLandscape::from_json(const std::string& text) {
    const json doc = json::parse(text);
    const int n = doc.at("n").get<int>();
    const int k = doc.at("k").get<int>();
    const std::uint64_t seed = doc.at("seed").get<std::uint64_t>();
    if (!doc.contains("neighbors") || !doc.contains("contributions"))
        return generate(n, k, seed);

    NkLandscape nk;
    nk.n_ = n;
    nk.k_ = k;
    nk.seed_ = seed;
    nk.neighbors_ = doc.at("neighbors").get<std::vector<std::vector<int>>>();
    nk.contributions_ = doc.at("contributions").get<std::vector<std::vector<double>>>();
    if (nk.neighbors_.size() != static_cast<std::size_t>(n) ||
        nk.contributions_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("NkLandscape::from_json: tables must have n rows");
    const std::size_t width = std::size_t{1} << (k + 1);
    for (const auto& row : nk.neighbors_)
        if (row.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("NkLandscape::from_json: neighbor rows must have k entries");
    for (const auto& row : nk.contributions_)
        if (row.size() != width)
            throw std::invalid_argument("NkLandscape::from_json: contribution rows must have 2^(k+1) entries");
    return nk;
}

std::vector<std::uint8_t> binarize_sigmoid(std::span<const double> x) {
    std::vector<std::uint8_t> bits(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) bits[d] = x[d] > 0.0 ? 1 : 0;
    return bits;
}

const std::vector<NkBenchmarkConfig>& nk_benchmark_configs() {
    static const std::vector<NkBenchmarkConfig> configs = {
        {"simple", 20, 2}, {"medium", 30, 3}, {"hard", 50, 4},
        {"harder", 70, 4}, {"complex", 100, 5},
    };
    return configs;
}

}  // namespace octo
