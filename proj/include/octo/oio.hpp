#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "octo/record.hpp"
#include "octo/rng.hpp"
#include "octo/search_space.hpp"

namespace octo {

// Hyperparameters of the octopus-inspired optimizer. Defaults give the
// 5 x 40 x 100 = 20,000-evaluation configuration used throughout the
// benchmark suite.
struct OioConfig {
    int num_tentacles = 5;
    int suckers_per_tentacle = 40;
    int iterations_per_tentacle = 100;  // T_max of the energy schedule
    int stagnation_threshold = 5;       // regenerate when stagnation exceeds this
    double diversity_threshold = 0.005;
    int elite_memory_size = 8;
    double levy_alpha = 0.01;  // step scale of the Levy flight
    double levy_beta = 1.5;    // tail index in (1, 2]
    double elite_noise_sigma = 0.1;  // fraction of the per-dimension range
    double inertia = 0.7;            // w
    double c1 = 1.5;                 // pull toward the personal best
    double c2 = 1.5;                 // pull toward the tentacle best
    double c3 = 1.5;                 // pull toward the global best
    // Adjust w, c1 and c3 with optimization progress (inertia 0.9 -> 0.4,
    // cognitive 2.5 -> 0.5, social 0.5 -> 2.5); the static values above are
    // used as-is when disabled.
    bool adaptive_coefficients = true;
    double master_fraction = 0.4;    // top fraction of tentacles acting as masters
    // Masters favour the hierarchical PSO move over the energy pull at these
    // odds; slaves choose 50/50.
    double master_pso_bias = 0.75;
    // Initial tentacle radius as a fraction of the smallest dimension range.
    double initial_radius_fraction = 0.25;

    void validate() const;
};

enum class TentacleRole { Master, Slave };

// Elementary search agent.
struct SuckerState {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> personal_best;
    double personal_best_fitness = std::numeric_limits<double>::infinity();
    double fitness = std::numeric_limits<double>::infinity();  // of the current position
};

// Regional sub-optimizer owning a swarm of suckers.
struct TentacleState {
    std::vector<double> center;
    double radius = 0.0;
    TentacleRole role = TentacleRole::Slave;
    std::vector<double> local_best;
    double local_best_fitness = std::numeric_limits<double>::infinity();
    int stagnation = 0;
    std::vector<SuckerState> suckers;
};

struct EliteEntry {
    std::vector<double> position;
    double fitness = 0.0;
};

// Bounded global archive of the best solutions seen, sorted ascending by
// fitness, deduplicated on exact position equality.
class EliteMemory {
  public:
    explicit EliteMemory(std::size_t capacity);

    // Inserts the candidate when it beats the worst entry or capacity is not
    // reached yet; returns whether the memory changed.
    bool offer(const std::vector<double>& position, double fitness);

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }
    const EliteEntry& entry(std::size_t i) const { return entries_[i]; }
    const EliteEntry& pick(Rng& rng) const;

  private:
    std::size_t capacity_;
    std::vector<EliteEntry> entries_;
};

// Top-level search state.
struct OctopusState {
    std::vector<TentacleState> tentacles;
    std::vector<double> global_best;
    double global_best_fitness = std::numeric_limits<double>::infinity();
    EliteMemory elite{8};
    long long evaluations_used = 0;
};

// Move and event counters, exposed for phase-schedule checks.
struct OioStats {
    long long levy_moves = 0;
    long long elite_moves = 0;
    long long pso_moves = 0;
    long long pull_moves = 0;
    long long exploration_moves_late_half = 0;  // exploration fired with t/T_max > 0.5
    long long stagnation_regenerations = 0;
    long long diversity_regenerations = 0;
};

// ---- elementary operations ----------------------------------------------

// E = 2 * e0 * (1 - t / t_max); e0 is drawn as 2u - 1 by the rng overload.
double energy_at(double e0, long long t, long long t_max);
double compute_energy(long long t, long long t_max, Rng& rng);

// Levy-flight exploration around a peer sucker:
//   candidate = peer + alpha * levy(D) . (peer - 2u * self), clamped.
std::vector<double> explore_levy(const SuckerState& self, const SuckerState& peer,
                                 const SearchSpace& space, const OioConfig& cfg, Rng& rng);

// Gaussian perturbation of a uniformly chosen elite entry; std::nullopt when
// the memory is empty (caller falls back to the Levy move).
std::optional<std::vector<double>> explore_elite(const EliteMemory& elite, const SearchSpace& space,
                                                 const OioConfig& cfg, Rng& rng);

struct PsoMove {
    std::vector<double> velocity;  // v' before any clamping adjustment
    std::vector<double> position;  // S + v', clamped to bounds
};

// Hierarchical PSO update toward the personal, tentacle and global bests;
// r1, r2, r3 are uniform vectors drawn per dimension.
PsoMove exploit_pso(const SuckerState& self, const std::vector<double>& tentacle_best,
                    const std::vector<double>& global_best, const SearchSpace& space,
                    const OioConfig& cfg, Rng& rng);

// Energy-modulated pull toward the global best:
//   S' = G - E * |G - S| (element-wise absolute value), clamped.
std::vector<double> exploit_energy_pull(const SuckerState& self,
                                        const std::vector<double>& global_best, double energy,
                                        const SearchSpace& space);

// Polls all suckers' personal bests into the tentacle best (ties: lowest
// sucker index). Increments stagnation when nothing strictly improved, resets
// it otherwise. Returns whether the tentacle best improved.
bool update_tentacle_best(TentacleState& tentacle);

// Unconditional reset: uniform new center, initial radius, suckers resampled
// in the new neighborhood with zero velocity and cleared personal bests.
void regenerate_tentacle(TentacleState& tentacle, const SearchSpace& space, const OioConfig& cfg,
                         Rng& rng);

// Applies regenerate_tentacle when stagnation strictly exceeds the threshold.
bool check_and_regenerate(TentacleState& tentacle, const SearchSpace& space, const OioConfig& cfg,
                          Rng& rng);

// Mean pairwise distance between all sucker positions divided by the diameter
// of the search box; in [0, 1]. Requires at least two suckers.
double population_diversity(const OctopusState& state, const SearchSpace& space);

// ---- optimizer ------------------------------------------------------------

class OioOptimizer {
  public:
    OioOptimizer(SearchSpace space, OioConfig config, std::uint64_t seed);

    // Evaluates the initial sucker layout; consumes num_tentacles *
    // suckers_per_tentacle evaluations from the recorder.
    void initialize(const ObjectiveFn& objective, ProgressRecorder& recorder);

    // Runs one iteration. Returns false once the schedule or the budget is
    // exhausted; a partial iteration performs only the evaluations that fit.
    bool step(const ObjectiveFn& objective, ProgressRecorder& recorder);

    const OctopusState& state() const { return state_; }
    const OioStats& stats() const { return stats_; }
    long long iteration() const { return t_; }

  private:
    void evaluate_sucker(SuckerState& sucker, const ObjectiveFn& objective,
                         ProgressRecorder& recorder);
    void assign_roles();
    void commit_move(SuckerState& sucker, std::vector<double> candidate);
    OioConfig effective_config() const;

    SearchSpace space_;
    OioConfig config_;
    std::uint64_t seed_;
    OctopusState state_;
    OioStats stats_;
    long long t_ = 0;
    bool initialized_ = false;
};

// Full run: initialization plus step loop until the budget or the iteration
// schedule is exhausted. Requires budget >= num_tentacles * suckers_per_tentacle.
RunRecord optimize_oio(const ObjectiveFn& objective, const SearchSpace& space,
                       const OioConfig& config, long long budget, std::uint64_t seed,
                       OioStats* stats_out = nullptr);

}  // namespace octo
