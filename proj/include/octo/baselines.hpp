#pragma once

#include <cstdint>
#include <string>

#include "octo/record.hpp"
#include "octo/rng.hpp"

namespace octo {

enum class BaselineAlgorithm { HC, SA, GA, DE, PSO };

BaselineAlgorithm parse_baseline(const std::string& name);  // invalid name throws
std::string baseline_name(BaselineAlgorithm algorithm);

// Textbook hyperparameters for the five classic comparison algorithms.
struct BaselineConfig {
    BaselineAlgorithm algorithm = BaselineAlgorithm::HC;

    // HC / SA share the proposal kernel: 1-bit flip on binary problems,
    // single-dimension Gaussian perturbation on continuous ones.
    double hc_sigma_fraction = 0.05;  // step sigma as a fraction of the dimension range
    double sa_initial_temperature = 100.0;
    double sa_cooling = 0.99;  // geometric, applied once per evaluation

    int ga_population = 50;
    double ga_crossover_rate = 0.8;
    double ga_mutation_rate = 0.01;  // per gene
    double ga_mutation_sigma_fraction = 0.1;
    int ga_tournament = 2;

    int de_population = 50;
    double de_weight = 0.5;     // F
    double de_crossover = 0.7;  // CR

    int pso_swarm = 30;
    double pso_inertia = 0.7;
    double pso_c1 = 2.0;
    double pso_c2 = 2.0;

    void validate() const;

    // Smallest budget that still allows initialization.
    long long minimum_budget() const;
};

// SA temperature after `evaluations` cooling steps.
double sa_temperature(double initial_temperature, double cooling, long long evaluations);

// Metropolis rule: non-worsening moves always accepted, worsening moves with
// probability exp(-delta / temperature).
bool sa_accept(double delta, double temperature, Rng& rng);

// Runs the configured baseline to budget exhaustion. HC, SA and GA use the
// native bit-string view when the objective announces one; DE and PSO always
// search the continuous space. Deterministic under (config, objective, seed).
RunRecord run_baseline(const BaselineConfig& config, const Objective& objective, long long budget,
                       std::uint64_t seed);

}  // namespace octo
