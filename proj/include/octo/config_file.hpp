#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>

#include "octo/baselines.hpp"
#include "octo/oio.hpp"

namespace octo {

// Flat `key = value` document (one pair per line, `#` comments). Keys mirror
// the config field names, prefixed by the algorithm:
//   oio.num_tentacles, oio.suckers_per_tentacle, oio.iterations_per_tentacle,
//   oio.stagnation_threshold, oio.diversity_threshold, oio.elite_memory_size,
//   oio.levy_alpha, oio.levy_beta, oio.elite_noise_sigma, oio.inertia,
//   oio.c1, oio.c2, oio.c3, oio.adaptive_coefficients, oio.master_fraction,
//   hc.sigma_fraction, sa.initial_temperature, sa.cooling,
//   ga.population, ga.crossover_rate, ga.mutation_rate,
//   ga.mutation_sigma_fraction, ga.tournament,
//   de.population, de.weight, de.crossover,
//   pso.swarm, pso.inertia, pso.c1, pso.c2
// Unknown keys raise std::invalid_argument.
std::map<std::string, std::string> parse_key_values(std::istream& in);

void apply_config(const std::map<std::string, std::string>& entries, OioConfig& oio,
                  BaselineConfig& baselines);

void load_config_file(const std::filesystem::path& file, OioConfig& oio,
                      BaselineConfig& baselines);

}  // namespace octo
