#include "octo/protein.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace octo {

namespace {

int alphabet_index(char aa) {
    const auto at = kAminoAcids.find(aa);
    return at == std::string_view::npos ? -1 : static_cast<int>(at);
}

[[noreturn]] void fail(int line_number, const std::string& what) {
    throw FormatError("line " + std::to_string(line_number) + ": " + what);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

ProteinCodec::ProteinCodec(int length, DecodeMode mode) : length_(length), mode_(mode) {
    if (length < 1) throw std::invalid_argument("ProteinCodec: length must be >= 1");
}

std::vector<std::vector<double>> ProteinCodec::softmax_matrix(std::span<const double> internal) const {
    const std::size_t width = kAminoAcids.size();
    if (internal.size() != static_cast<std::size_t>(length_) * width)
        throw std::invalid_argument("ProteinCodec: internal vector must have length L*20");
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(length_));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto row = internal.subspan(i * width, width);
        const double row_max = *std::max_element(row.begin(), row.end());
        auto& out = rows[i];
        out.resize(width);
        double sum = 0.0;
        for (std::size_t j = 0; j < width; ++j) {
            out[j] = std::exp(row[j] - row_max);
            sum += out[j];
        }
        for (double& v : out) v /= sum;
    }
    return rows;
}

std::string ProteinCodec::decode(std::span<const double> internal, Rng* rng) const {
    const std::size_t width = kAminoAcids.size();
    if (internal.size() != static_cast<std::size_t>(length_) * width)
        throw std::invalid_argument("ProteinCodec: internal vector must have length L*20");
    std::string sequence(static_cast<std::size_t>(length_), '?');
    if (mode_ == DecodeMode::Argmax) {
        // Softmax is monotone per row, so the argmax of the raw scores decides.
        for (std::size_t i = 0; i < sequence.size(); ++i) {
            const auto row = internal.subspan(i * width, width);
            std::size_t best = 0;
            for (std::size_t j = 1; j < width; ++j)
                if (row[j] > row[best]) best = j;
            sequence[i] = kAminoAcids[best];
        }
        return sequence;
    }
    if (!rng) throw std::invalid_argument("ProteinCodec: sample mode needs a random source");
    const auto matrix = softmax_matrix(internal);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const double u = rng->uniform();
        double acc = 0.0;
        std::size_t pick = width - 1;
        for (std::size_t j = 0; j < width; ++j) {
            acc += matrix[i][j];
            if (u < acc) {
                pick = j;
                break;
            }
        }
        sequence[i] = kAminoAcids[pick];
    }
    return sequence;
}

double EmpiricalLandscape::fitness(std::string_view sequence) const {
    if (sequence.size() != wild_type.size())
        throw std::invalid_argument("EmpiricalLandscape: sequence length mismatch");
    if (const auto hit = records.find(std::string(sequence)); hit != records.end())
        return hit->second;
    double value = wild_type_fitness;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (sequence[i] == wild_type[i]) continue;
        const auto effect = single_effects.find({static_cast<int>(i), sequence[i]});
        value += effect != single_effects.end() ? effect->second : unknown_penalty;
    }
    return value;
}

EmpiricalLandscape load_empirical(std::istream& table, const EmpiricalFormat& format) {
    EmpiricalLandscape landscape;
    landscape.unknown_penalty = format.unknown_penalty;
    std::optional<std::string> wild_type = format.wild_type;

    enum class Mode { Unset, Sequence, Mutations } mode = Mode::Unset;
    struct Row {
        int line;
        std::string sequence;
        double fitness;
    };
    std::vector<Row> rows;

    std::string raw;
    int line_number = 0;
    while (std::getline(table, raw)) {
        ++line_number;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            // `# wild_type: <SEQ>` declares the reference sequence.
            const auto at = line.find("wild_type:");
            if (at != std::string::npos) wild_type = trim(line.substr(at + 10));
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos) fail(line_number, "expected two tab-separated columns");
        const std::string first = trim(line.substr(0, tab));
        const std::string second = trim(line.substr(tab + 1));

        if (mode == Mode::Unset) {
            if (first == "sequence" && second == "fitness") mode = Mode::Sequence;
            else if (first == "mutations" && second == "fitness") mode = Mode::Mutations;
            else fail(line_number, "header must be 'sequence<TAB>fitness' or 'mutations<TAB>fitness'");
            continue;
        }

        double fitness = 0.0;
        try {
            std::size_t consumed = 0;
            fitness = std::stod(second, &consumed);
            if (consumed != second.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            fail(line_number, "non-numeric fitness '" + second + "'");
        }

        if (mode == Mode::Sequence) {
            if (first.empty()) fail(line_number, "empty sequence");
            for (char c : first)
                if (alphabet_index(c) < 0)
                    fail(line_number, std::string("unknown amino acid '") + c + "'");
            if (!wild_type && rows.empty()) wild_type = first;  // first record is the reference
            rows.push_back({line_number, first, fitness});
            continue;
        }

        // Mutation notation relative to the declared wild type.
        if (!wild_type)
            fail(line_number, "mutation notation used but no wild type declared");
        std::string sequence = *wild_type;
        if (first != "WT") {
            std::stringstream tokens(first);
            std::string token;
            while (std::getline(tokens, token, ':')) {
                token = trim(token);
                if (token.size() < 3) fail(line_number, "malformed mutation token '" + token + "'");
                const char from = token.front();
                const char to = token.back();
                int position = 0;
                try {
                    std::size_t consumed = 0;
                    position = std::stoi(token.substr(1, token.size() - 2), &consumed);
                    if (consumed != token.size() - 2) throw std::invalid_argument("bad position");
                } catch (const std::exception&) {
                    fail(line_number, "malformed mutation token '" + token + "'");
                }
                if (position < 1 || position > static_cast<int>(sequence.size()))
                    fail(line_number, "mutation position out of range in '" + token + "'");
                if (alphabet_index(from) < 0 || alphabet_index(to) < 0)
                    fail(line_number, "unknown amino acid in '" + token + "'");
                if (sequence[static_cast<std::size_t>(position - 1)] != from)
                    fail(line_number, "wild-type residue mismatch in '" + token + "'");
                sequence[static_cast<std::size_t>(position - 1)] = to;
            }
        }
        rows.push_back({line_number, sequence, fitness});
    }

    if (!wild_type) throw FormatError("table declares no records and no wild type");
    landscape.wild_type = *wild_type;

    bool have_wt_fitness = false;
    for (const Row& row : rows) {
        if (row.sequence.size() != landscape.wild_type.size())
            fail(row.line, "sequence length differs from the wild type");
        landscape.records[row.sequence] = row.fitness;
        if (row.sequence == landscape.wild_type) {
            landscape.wild_type_fitness = row.fitness;
            have_wt_fitness = true;
        }
    }
    if (!have_wt_fitness) throw FormatError("no fitness record for the wild type sequence");

    // Fit single-mutant rows into the additive model.
    for (const Row& row : rows) {
        int differing = 0;
        int position = -1;
        for (std::size_t i = 0; i < row.sequence.size(); ++i) {
            if (row.sequence[i] != landscape.wild_type[i]) {
                ++differing;
                position = static_cast<int>(i);
            }
        }
        if (differing == 1)
            landscape.single_effects[{position, row.sequence[static_cast<std::size_t>(position)]}] =
                row.fitness - landscape.wild_type_fitness;
    }
    return landscape;
}

Problem protein_problem(std::shared_ptr<const EmpiricalLandscape> landscape, std::string id) {
    const int length = static_cast<int>(landscape->wild_type.size());
    const ProteinCodec codec(length, DecodeMode::Argmax);
    Problem p{std::move(id),
              SearchSpace::cube(static_cast<std::size_t>(length) * kAminoAcids.size(), -5.0, 5.0),
              Direction::Maximize,
              std::nullopt,
              {},
              nullptr};
    p.fn = [landscape, codec](std::span<const double> x) {
        return landscape->fitness(codec.decode(x));
    };
    return p;
}

}  // namespace octo
