#include "octo/oio.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace octo {

namespace {

// Stream tags keep the per-purpose substreams disjoint.
enum StreamTag : std::uint64_t {
    kInitStream = 1,
    kSuckerStream = 2,
    kRegenStream = 3,
};

}  // namespace

void OioConfig::validate() const {
    if (num_tentacles < 1 || suckers_per_tentacle < 1 || iterations_per_tentacle < 1 ||
        stagnation_threshold < 1 || elite_memory_size < 1)
        throw std::invalid_argument("OioConfig: counts and thresholds must be >= 1");
    if (diversity_threshold < 0.0)
        throw std::invalid_argument("OioConfig: diversity_threshold must be >= 0");
    if (levy_alpha <= 0.0 || elite_noise_sigma <= 0.0)
        throw std::invalid_argument("OioConfig: levy_alpha and elite_noise_sigma must be > 0");
    if (levy_beta <= 1.0 || levy_beta > 2.0)
        throw std::invalid_argument("OioConfig: levy_beta must lie in (1, 2]");
    if (master_fraction < 0.0 || master_fraction > 1.0)
        throw std::invalid_argument("OioConfig: master_fraction must lie in [0, 1]");
    if (initial_radius_fraction <= 0.0)
        throw std::invalid_argument("OioConfig: initial_radius_fraction must be > 0");
}

// ---- elite memory -----------------------------------------------------------

EliteMemory::EliteMemory(std::size_t capacity) : capacity_(capacity) {
    if (capacity < 1) throw std::invalid_argument("EliteMemory: capacity must be >= 1");
}

bool EliteMemory::offer(const std::vector<double>& position, double fitness) {
    for (const EliteEntry& e : entries_)
        if (e.position == position) return false;
    if (entries_.size() == capacity_ && fitness >= entries_.back().fitness) return false;
    auto at = std::upper_bound(entries_.begin(), entries_.end(), fitness,
                               [](double f, const EliteEntry& e) { return f < e.fitness; });
    entries_.insert(at, EliteEntry{position, fitness});
    if (entries_.size() > capacity_) entries_.pop_back();
    return true;
}

const EliteEntry& EliteMemory::pick(Rng& rng) const {
    if (entries_.empty()) throw std::logic_error("EliteMemory::pick on empty memory");
    return entries_[rng.index(entries_.size())];
}

// ---- elementary operations --------------------------------------------------

double energy_at(double e0, long long t, long long t_max) {
    if (t_max < 1) throw std::invalid_argument("energy_at: t_max must be >= 1");
    return 2.0 * e0 * (1.0 - static_cast<double>(t) / static_cast<double>(t_max));
}

double compute_energy(long long t, long long t_max, Rng& rng) {
    if (t_max < 1) throw std::invalid_argument("compute_energy: t_max must be >= 1");
    const double e0 = 2.0 * rng.uniform() - 1.0;
    return energy_at(e0, t, t_max);
}

std::vector<double> explore_levy(const SuckerState& self, const SuckerState& peer,
                                 const SearchSpace& space, const OioConfig& cfg, Rng& rng) {
    const std::size_t dim = space.dimension();
    const double u = rng.uniform();
    std::vector<double> candidate(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        const double step = levy_step(rng, cfg.levy_beta);
        candidate[d] = peer.position[d] +
                       cfg.levy_alpha * step * (peer.position[d] - 2.0 * u * self.position[d]);
    }
    space.clamp(candidate);
    return candidate;
}

std::optional<std::vector<double>> explore_elite(const EliteMemory& elite, const SearchSpace& space,
                                                 const OioConfig& cfg, Rng& rng) {
    if (elite.empty()) return std::nullopt;
    const EliteEntry& guide = elite.pick(rng);
    std::vector<double> candidate(space.dimension());
    for (std::size_t d = 0; d < candidate.size(); ++d)
        candidate[d] = guide.position[d] + rng.normal(0.0, cfg.elite_noise_sigma * space.range(d));
    space.clamp(candidate);
    return candidate;
}

PsoMove exploit_pso(const SuckerState& self, const std::vector<double>& tentacle_best,
                    const std::vector<double>& global_best, const SearchSpace& space,
                    const OioConfig& cfg, Rng& rng) {
    PsoMove move;
    move.velocity.resize(space.dimension());
    move.position.resize(space.dimension());
    for (std::size_t d = 0; d < space.dimension(); ++d) {
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        const double r3 = rng.uniform();
        move.velocity[d] = cfg.inertia * self.velocity[d] +
                           cfg.c1 * r1 * (self.personal_best[d] - self.position[d]) +
                           cfg.c2 * r2 * (tentacle_best[d] - self.position[d]) +
                           cfg.c3 * r3 * (global_best[d] - self.position[d]);
        move.position[d] = self.position[d] + move.velocity[d];
    }
    space.clamp(move.position);
    return move;
}

std::vector<double> exploit_energy_pull(const SuckerState& self,
                                        const std::vector<double>& global_best, double energy,
                                        const SearchSpace& space) {
    std::vector<double> candidate(global_best.size());
    for (std::size_t d = 0; d < candidate.size(); ++d)
        candidate[d] = global_best[d] - energy * std::fabs(global_best[d] - self.position[d]);
    space.clamp(candidate);
    return candidate;
}

bool update_tentacle_best(TentacleState& tentacle) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_idx = 0;
    for (std::size_t j = 0; j < tentacle.suckers.size(); ++j) {
        if (tentacle.suckers[j].personal_best_fitness < best) {
            best = tentacle.suckers[j].personal_best_fitness;
            best_idx = j;
        }
    }
    const bool improved = best < tentacle.local_best_fitness;
    if (improved) {
        tentacle.local_best = tentacle.suckers[best_idx].personal_best;
        tentacle.local_best_fitness = best;
        tentacle.stagnation = 0;
    } else {
        ++tentacle.stagnation;
    }
    return improved;
}

void regenerate_tentacle(TentacleState& tentacle, const SearchSpace& space, const OioConfig& cfg,
                         Rng& rng) {
    tentacle.center = space.sample_uniform(rng);
    tentacle.radius = cfg.initial_radius_fraction * space.min_range();
    tentacle.stagnation = 0;
    // Until the fresh suckers' first evaluations re-seed it, the center stands
    // in for the local best.
    tentacle.local_best = tentacle.center;
    tentacle.local_best_fitness = std::numeric_limits<double>::infinity();
    for (SuckerState& s : tentacle.suckers) {
        s.position = space.sample_in_box(tentacle.center, tentacle.radius, rng);
        s.velocity.assign(space.dimension(), 0.0);
        s.personal_best = s.position;
        s.personal_best_fitness = std::numeric_limits<double>::infinity();
        s.fitness = std::numeric_limits<double>::infinity();
    }
}

bool check_and_regenerate(TentacleState& tentacle, const SearchSpace& space, const OioConfig& cfg,
                          Rng& rng) {
    if (tentacle.stagnation <= cfg.stagnation_threshold) return false;
    regenerate_tentacle(tentacle, space, cfg, rng);
    return true;
}

double population_diversity(const OctopusState& state, const SearchSpace& space) {
    std::vector<const SuckerState*> all;
    for (const TentacleState& t : state.tentacles)
        for (const SuckerState& s : t.suckers) all.push_back(&s);
    if (all.size() < 2)
        throw std::logic_error("population_diversity: needs at least 2 suckers");
    double sum = 0.0;
    for (std::size_t a = 0; a + 1 < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            sum += euclidean_distance(all[a]->position, all[b]->position);
    const double pairs = 0.5 * static_cast<double>(all.size()) * static_cast<double>(all.size() - 1);
    return sum / pairs / space.diameter();
}

// ---- optimizer --------------------------------------------------------------

OioOptimizer::OioOptimizer(SearchSpace space, OioConfig config, std::uint64_t seed)
    : space_(std::move(space)), config_(config), seed_(seed) {
    config_.validate();
    state_.elite = EliteMemory(static_cast<std::size_t>(config_.elite_memory_size));
}

void OioOptimizer::evaluate_sucker(SuckerState& sucker, const ObjectiveFn& objective,
                                   ProgressRecorder& recorder) {
    const double f = recorder.observe(objective(sucker.position));
    sucker.fitness = f;
    if (f < sucker.personal_best_fitness) {
        sucker.personal_best = sucker.position;
        sucker.personal_best_fitness = f;
    }
    if (f < state_.global_best_fitness) {
        state_.global_best = sucker.position;
        state_.global_best_fitness = f;
    }
    state_.elite.offer(sucker.position, f);
    state_.evaluations_used = recorder.used();
}

void OioOptimizer::assign_roles() {
    const std::size_t n = state_.tentacles.size();
    const std::size_t masters = std::min<std::size_t>(
        n, static_cast<std::size_t>(
               std::ceil(config_.master_fraction * static_cast<double>(n))));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // Ties keep the lower tentacle index first.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return state_.tentacles[a].local_best_fitness < state_.tentacles[b].local_best_fitness;
    });
    for (std::size_t rank = 0; rank < n; ++rank)
        state_.tentacles[order[rank]].role =
            rank < masters ? TentacleRole::Master : TentacleRole::Slave;
}

OioConfig OioOptimizer::effective_config() const {
    // Time-varying coefficients: inertia decays while the social pull toward
    // the global best takes over from the cognitive component.
    if (!config_.adaptive_coefficients) return config_;
    OioConfig eff = config_;
    const double progress = static_cast<double>(t_) / config_.iterations_per_tentacle;
    eff.inertia = 0.9 - 0.5 * progress;
    eff.c1 = 2.5 - 2.0 * progress;
    eff.c3 = 0.5 + 2.0 * progress;
    return eff;
}

void OioOptimizer::commit_move(SuckerState& sucker, std::vector<double> candidate) {
    // Candidates arrive clamped by the move operators; a dimension resting on
    // the boundary has its velocity component zeroed.
    for (std::size_t d = 0; d < candidate.size(); ++d) {
        if (candidate[d] <= space_.lower()[d] || candidate[d] >= space_.upper()[d])
            sucker.velocity[d] = 0.0;
        sucker.position[d] = candidate[d];
    }
}

void OioOptimizer::initialize(const ObjectiveFn& objective, ProgressRecorder& recorder) {
    if (initialized_) throw std::logic_error("OioOptimizer: already initialized");
    const long long need = static_cast<long long>(config_.num_tentacles) * config_.suckers_per_tentacle;
    if (recorder.remaining() < need)
        throw std::invalid_argument("OioOptimizer: budget must cover the initial population (" +
                                    std::to_string(need) + " evaluations)");
    Rng init_rng(substream_seed({seed_, kInitStream}));
    const double radius = config_.initial_radius_fraction * space_.min_range();
    state_.tentacles.resize(static_cast<std::size_t>(config_.num_tentacles));
    for (TentacleState& tentacle : state_.tentacles) {
        tentacle.center = space_.sample_uniform(init_rng);
        tentacle.radius = radius;
        tentacle.local_best.assign(space_.dimension(), 0.0);
        tentacle.local_best_fitness = std::numeric_limits<double>::infinity();
        tentacle.stagnation = 0;
        tentacle.suckers.resize(static_cast<std::size_t>(config_.suckers_per_tentacle));
        for (SuckerState& sucker : tentacle.suckers) {
            sucker.position = space_.sample_in_box(tentacle.center, tentacle.radius, init_rng);
            sucker.velocity.assign(space_.dimension(), 0.0);
            sucker.personal_best = sucker.position;
            sucker.personal_best_fitness = std::numeric_limits<double>::infinity();
        }
    }
    for (TentacleState& tentacle : state_.tentacles) {
        for (SuckerState& sucker : tentacle.suckers)
            evaluate_sucker(sucker, objective, recorder);
        update_tentacle_best(tentacle);
        tentacle.stagnation = 0;  // first aggregation is not a stagnation event
    }
    assign_roles();
    initialized_ = true;
}

bool OioOptimizer::step(const ObjectiveFn& objective, ProgressRecorder& recorder) {
    if (!initialized_) throw std::logic_error("OioOptimizer: initialize before stepping");
    if (recorder.exhausted() || t_ >= config_.iterations_per_tentacle) return false;
    ++t_;
    const long long t_max = config_.iterations_per_tentacle;
    const bool late_half = 2 * t_ > t_max;

    for (std::size_t i = 0; i < state_.tentacles.size(); ++i) {
        TentacleState& tentacle = state_.tentacles[i];
        for (std::size_t j = 0; j < tentacle.suckers.size(); ++j) {
            if (recorder.exhausted()) break;
            SuckerState& sucker = tentacle.suckers[j];
            // Per-sucker substream: candidate generation is reproducible
            // independent of evaluation order.
            Rng rng(substream_seed({seed_, kSuckerStream, static_cast<std::uint64_t>(t_),
                                    static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)}));

            // A freshly regenerated sucker spends its first turn evaluating
            // its new position, which re-seeds the tentacle best.
            if (sucker.fitness == std::numeric_limits<double>::infinity()) {
                evaluate_sucker(sucker, objective, recorder);
                continue;
            }
            const double energy = compute_energy(t_, t_max, rng);

            // The PSO move displaces the sucker unconditionally (it carries
            // the velocity state); the other three moves are probes adopted
            // only when they improve on the current position.
            std::optional<std::vector<double>> probe;
            if (std::fabs(energy) >= 1.0) {
                // Exploration: Levy flight or elite-guided, 50/50; an empty
                // elite memory falls back to the Levy move.
                std::optional<std::vector<double>> candidate;
                const bool use_levy = state_.elite.empty() || rng.coin(0.5);
                if (!use_levy) candidate = explore_elite(state_.elite, space_, config_, rng);
                if (!candidate) {
                    const SuckerState& peer = tentacle.suckers[rng.index(tentacle.suckers.size())];
                    candidate = explore_levy(sucker, peer, space_, config_, rng);
                    ++stats_.levy_moves;
                } else {
                    ++stats_.elite_moves;
                }
                if (late_half) ++stats_.exploration_moves_late_half;
                probe = std::move(*candidate);
            } else {
                // Exploitation: hierarchical PSO or energy pull. Masters
                // favour the PSO refinement.
                const double p_pso =
                    tentacle.role == TentacleRole::Master ? config_.master_pso_bias : 0.5;
                if (rng.coin(p_pso)) {
                    const PsoMove move = exploit_pso(sucker, tentacle.local_best,
                                                     state_.global_best, space_,
                                                     effective_config(), rng);
                    sucker.velocity = move.velocity;
                    for (std::size_t d = 0; d < move.position.size(); ++d) {
                        if (move.position[d] != sucker.position[d] + move.velocity[d])
                            sucker.velocity[d] = 0.0;
                        sucker.position[d] = move.position[d];
                    }
                    ++stats_.pso_moves;
                } else {
                    // Energy pull toward the global best, finished with a
                    // heavy-tailed dive so the refinement can hop to nearby
                    // basins late in the run.
                    auto candidate = exploit_energy_pull(sucker, state_.global_best, energy, space_);
                    for (std::size_t d = 0; d < candidate.size(); ++d)
                        candidate[d] += rng.uniform() * levy_step(rng, config_.levy_beta);
                    space_.clamp(candidate);
                    probe = std::move(candidate);
                    ++stats_.pull_moves;
                }
            }

            if (probe) {
                const double f = recorder.observe(objective(*probe));
                if (f < sucker.personal_best_fitness) {
                    sucker.personal_best = *probe;
                    sucker.personal_best_fitness = f;
                }
                if (f < state_.global_best_fitness) {
                    state_.global_best = *probe;
                    state_.global_best_fitness = f;
                }
                state_.elite.offer(*probe, f);
                state_.evaluations_used = recorder.used();
                if (f < sucker.fitness) {
                    // The jump discards the momentum of the old location.
                    sucker.velocity.assign(sucker.velocity.size(), 0.0);
                    commit_move(sucker, std::move(*probe));
                    sucker.fitness = f;
                }
            } else {
                evaluate_sucker(sucker, objective, recorder);
            }
        }
        update_tentacle_best(tentacle);
    }

    assign_roles();

    // Low diversity forces the worst slave tentacle to relocate (at most one
    // per iteration); masters are immune.
    if (population_diversity(state_, space_) < config_.diversity_threshold) {
        std::size_t worst = state_.tentacles.size();
        for (std::size_t i = 0; i < state_.tentacles.size(); ++i) {
            const TentacleState& t = state_.tentacles[i];
            if (t.role != TentacleRole::Slave) continue;
            if (worst == state_.tentacles.size() ||
                t.local_best_fitness > state_.tentacles[worst].local_best_fitness)
                worst = i;
        }
        if (worst < state_.tentacles.size()) {
            TentacleState& t = state_.tentacles[worst];
            state_.elite.offer(t.local_best, t.local_best_fitness);
            Rng rng(substream_seed({seed_, kRegenStream, static_cast<std::uint64_t>(t_),
                                    static_cast<std::uint64_t>(worst), 1}));
            regenerate_tentacle(t, space_, config_, rng);
            ++stats_.diversity_regenerations;
        }
    }

    for (std::size_t i = 0; i < state_.tentacles.size(); ++i) {
        TentacleState& tentacle = state_.tentacles[i];
        if (tentacle.stagnation <= config_.stagnation_threshold) continue;
        state_.elite.offer(tentacle.local_best, tentacle.local_best_fitness);
        Rng rng(substream_seed({seed_, kRegenStream, static_cast<std::uint64_t>(t_),
                                static_cast<std::uint64_t>(i), 0}));
        check_and_regenerate(tentacle, space_, config_, rng);
        ++stats_.stagnation_regenerations;
    }

    return !recorder.exhausted() && t_ < config_.iterations_per_tentacle;
}

RunRecord optimize_oio(const ObjectiveFn& objective, const SearchSpace& space,
                       const OioConfig& config, long long budget, std::uint64_t seed,
                       OioStats* stats_out) {
    config.validate();
    const long long init_cost =
        static_cast<long long>(config.num_tentacles) * config.suckers_per_tentacle;
    if (budget < init_cost)
        throw std::invalid_argument("optimize_oio: budget must be >= num_tentacles * suckers_per_tentacle");

    const auto started = std::chrono::steady_clock::now();
    ProgressRecorder recorder(budget);
    OioOptimizer optimizer(space, config, seed);
    optimizer.initialize(objective, recorder);
    while (optimizer.step(objective, recorder)) {
    }
    recorder.finalize();

    RunRecord record;
    record.algorithm = "oio";
    record.seed = seed;
    record.trace = recorder.trace();
    record.final_fitness = recorder.best();
    record.evaluations = recorder.used();
    record.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (stats_out) *stats_out = optimizer.stats();
    return record;
}

}  // namespace octo
