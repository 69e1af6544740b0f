#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "octo/baselines.hpp"
#include "octo/oio.hpp"
#include "octo/problem.hpp"
#include "octo/record.hpp"

namespace octo {

// Full algorithm roster: "oio" plus the five classic baselines.
const std::vector<std::string>& default_algorithms();
bool is_known_algorithm(const std::string& id);

struct ExperimentPlan {
    std::vector<std::string> algorithms;
    std::vector<Problem> problems;
    int repeats = 10;
    long long budget = 20000;
    OioConfig oio;
    BaselineConfig baselines;  // algorithm tag is overridden per run
};

// Deterministic per-run seed from the master seed and the run coordinates.
std::uint64_t run_seed(std::uint64_t master_seed, const std::string& algorithm,
                       const std::string& problem, int repeat);

// Executes `runner` against a counting guard on the objective: calls past the
// budget raise BudgetExhausted, which flags the returned record (with the
// evaluations that did fit) instead of crashing the experiment.
RunRecord run_guarded(const std::function<RunRecord(const Objective&)>& runner,
                      const Objective& view, long long budget);

// One run of a registered algorithm behind the budget guard.
RunRecord run_single(const std::string& algorithm, const Problem& problem, long long budget,
                     std::uint64_t seed, const OioConfig& oio_config,
                     const BaselineConfig& baseline_config, OioStats* stats_out = nullptr);

// Runs algorithms x problems x repeats. Records come back in canonical order
// (problem-major, then algorithm, then repeat) and are identical for any
// parallelism degree.
std::vector<RunRecord> run_experiment(const ExperimentPlan& plan, std::uint64_t master_seed,
                                      int parallelism = 1);

}  // namespace octo
