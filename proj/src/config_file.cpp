#include "octo/config_file.hpp"

#include <fstream>
#include <functional>
#include <stdexcept>

namespace octo {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

int to_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': bad integer '" + value + "'");
    }
}

double to_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': bad number '" + value + "'");
    }
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
    std::map<std::string, std::string> entries;
    std::string raw;
    int line_number = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        ": empty key or value");
        entries[key] = value;
    }
    return entries;
}

void apply_config(const std::map<std::string, std::string>& entries, OioConfig& oio,
                  BaselineConfig& baselines) {
    using IntField = int*;
    using DoubleField = double*;
    const std::map<std::string, IntField> ints = {
        {"oio.num_tentacles", &oio.num_tentacles},
        {"oio.suckers_per_tentacle", &oio.suckers_per_tentacle},
        {"oio.iterations_per_tentacle", &oio.iterations_per_tentacle},
        {"oio.stagnation_threshold", &oio.stagnation_threshold},
        {"oio.elite_memory_size", &oio.elite_memory_size},
        {"ga.population", &baselines.ga_population},
        {"ga.tournament", &baselines.ga_tournament},
        {"de.population", &baselines.de_population},
        {"pso.swarm", &baselines.pso_swarm},
    };
    const std::map<std::string, DoubleField> doubles = {
        {"oio.diversity_threshold", &oio.diversity_threshold},
        {"oio.levy_alpha", &oio.levy_alpha},
        {"oio.levy_beta", &oio.levy_beta},
        {"oio.elite_noise_sigma", &oio.elite_noise_sigma},
        {"oio.inertia", &oio.inertia},
        {"oio.c1", &oio.c1},
        {"oio.c2", &oio.c2},
        {"oio.c3", &oio.c3},
        {"oio.master_fraction", &oio.master_fraction},
        {"hc.sigma_fraction", &baselines.hc_sigma_fraction},
        {"sa.initial_temperature", &baselines.sa_initial_temperature},
        {"sa.cooling", &baselines.sa_cooling},
        {"ga.crossover_rate", &baselines.ga_crossover_rate},
        {"ga.mutation_rate", &baselines.ga_mutation_rate},
        {"ga.mutation_sigma_fraction", &baselines.ga_mutation_sigma_fraction},
        {"de.weight", &baselines.de_weight},
        {"de.crossover", &baselines.de_crossover},
        {"pso.inertia", &baselines.pso_inertia},
        {"pso.c1", &baselines.pso_c1},
        {"pso.c2", &baselines.pso_c2},
    };

    for (const auto& [key, value] : entries) {
        if (key == "oio.adaptive_coefficients") {
            if (value == "true" || value == "1") oio.adaptive_coefficients = true;
            else if (value == "false" || value == "0") oio.adaptive_coefficients = false;
            else throw std::invalid_argument("config key '" + key + "': bad boolean '" + value + "'");
        } else if (const auto it = ints.find(key); it != ints.end()) {
            *it->second = to_int(key, value);
        } else if (const auto dt = doubles.find(key); dt != doubles.end()) {
            *dt->second = to_double(key, value);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    oio.validate();
    baselines.validate();
}

void load_config_file(const std::filesystem::path& file, OioConfig& oio,
                      BaselineConfig& baselines) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot read config file '" + file.string() + "'");
    auto entries = parse_key_values(in);
    apply_config(entries, oio, baselines);
}

}  // namespace octo
