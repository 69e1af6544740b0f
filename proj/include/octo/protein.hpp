#pragma once

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "octo/problem.hpp"
#include "octo/rng.hpp"

namespace octo {

// The 20 canonical amino acids, one-letter codes in fixed canonical order.
inline constexpr std::string_view kAminoAcids = "ACDEFGHIKLMNPQRSTVWY";

enum class DecodeMode { Argmax, Sample };

// Probabilistic matrix encoding of a length-L sequence: a flat vector of
// L x 20 preference scores, reshaped row-major and softmaxed per position.
class ProteinCodec {
  public:
    ProteinCodec(int length, DecodeMode mode = DecodeMode::Argmax);

    int length() const { return length_; }
    DecodeMode mode() const { return mode_; }

    // Row-major L x 20 softmax matrix; every row sums to 1.
    std::vector<std::vector<double>> softmax_matrix(std::span<const double> internal) const;

    // Argmax decoding is deterministic (ties pick the lowest alphabet index);
    // sample mode draws each residue from its row distribution.
    std::string decode(std::span<const double> internal, Rng* rng = nullptr) const;

  private:
    int length_;
    DecodeMode mode_;
};

// Tabular sequence->fitness landscape with an additive single-mutant fallback.
struct EmpiricalLandscape {
    std::string wild_type;
    double wild_type_fitness = 0.0;
    std::unordered_map<std::string, double> records;
    // (0-based position, amino acid) -> fitness delta relative to wild type.
    std::map<std::pair<int, char>, double> single_effects;
    double unknown_penalty = -0.1;

    // Exact lookup wins; otherwise wild-type fitness plus additive effects
    // over differing positions (unknown substitutions contribute the penalty).
    double fitness(std::string_view sequence) const;
};

struct EmpiricalFormat {
    std::optional<std::string> wild_type;  // required for mutation notation
    double unknown_penalty = -0.1;
};

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parses the tab-separated landscape table. The header is either
// `sequence<TAB>fitness` or `mutations<TAB>fitness`; mutation rows hold
// colon-separated tokens like A42G (1-based positions, `WT` for the wild
// type itself). A `# wild_type: <SEQ>` comment line or the format descriptor
// declares the reference sequence; in sequence mode the first record serves
// as the reference when none is declared. Malformed rows raise FormatError
// with their line number.
EmpiricalLandscape load_empirical(std::istream& table, const EmpiricalFormat& format = {});

// Maximization problem over the L x 20 encoding box [-5, 5] with argmax
// decoding.
Problem protein_problem(std::shared_ptr<const EmpiricalLandscape> landscape, std::string id);

}  // namespace octo
