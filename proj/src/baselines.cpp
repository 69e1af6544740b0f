#include "octo/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "octo/rng.hpp"

namespace octo {

namespace {

struct Genome {
    std::vector<std::uint8_t> bits;
    double fitness = std::numeric_limits<double>::infinity();
};

struct RealVector {
    std::vector<double> x;
    double fitness = std::numeric_limits<double>::infinity();
};

std::vector<std::uint8_t> random_bits(std::size_t n, Rng& rng) {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = rng.coin(0.5) ? 1 : 0;
    return bits;
}

// ---- HC / SA ---------------------------------------------------------------

// Shared proposal kernel: flip one uniformly chosen bit, or perturb one
// uniformly chosen dimension with Gaussian noise scaled to its range.
template <typename State>
State propose_neighbor(const State& current, const Objective& objective, double sigma_fraction,
                       Rng& rng);

template <>
Genome propose_neighbor(const Genome& current, const Objective&, double, Rng& rng) {
    Genome next = current;
    const std::size_t at = rng.index(next.bits.size());
    next.bits[at] ^= 1;
    return next;
}

template <>
RealVector propose_neighbor(const RealVector& current, const Objective& objective,
                            double sigma_fraction, Rng& rng) {
    RealVector next = current;
    const std::size_t d = rng.index(next.x.size());
    next.x[d] += rng.normal(0.0, sigma_fraction * objective.space.range(d));
    next.x[d] = std::clamp(next.x[d], objective.space.lower()[d], objective.space.upper()[d]);
    return next;
}

template <typename State, typename Eval, typename Init>
void run_hc(const BaselineConfig& cfg, const Objective& objective, ProgressRecorder& rec,
            Rng& rng, Eval eval, Init init) {
    State current = init(rng);
    current.fitness = eval(current);
    while (!rec.exhausted()) {
        State next = propose_neighbor(current, objective, cfg.hc_sigma_fraction, rng);
        next.fitness = eval(next);
        if (next.fitness < current.fitness) current = std::move(next);
    }
}

template <typename State, typename Eval, typename Init>
void run_sa(const BaselineConfig& cfg, const Objective& objective, ProgressRecorder& rec,
            Rng& rng, Eval eval, Init init) {
    State current = init(rng);
    current.fitness = eval(current);
    double temperature = cfg.sa_initial_temperature;
    while (!rec.exhausted()) {
        State next = propose_neighbor(current, objective, cfg.hc_sigma_fraction, rng);
        next.fitness = eval(next);
        if (sa_accept(next.fitness - current.fitness, temperature, rng))
            current = std::move(next);
        temperature *= cfg.sa_cooling;  // once per evaluation
    }
}

// ---- GA ---------------------------------------------------------------------

template <typename State>
std::size_t tournament(const std::vector<State>& population, int size, Rng& rng) {
    std::size_t best = rng.index(population.size());
    for (int i = 1; i < size; ++i) {
        const std::size_t challenger = rng.index(population.size());
        if (population[challenger].fitness < population[best].fitness) best = challenger;
    }
    return best;
}

template <typename State, typename Eval, typename Init, typename Cross, typename Mutate>
void run_ga(const BaselineConfig& cfg, ProgressRecorder& rec, Rng& rng, Eval eval, Init init,
            Cross crossover, Mutate mutate) {
    std::vector<State> population;
    population.reserve(static_cast<std::size_t>(cfg.ga_population));
    for (int i = 0; i < cfg.ga_population && !rec.exhausted(); ++i) {
        State s = init(rng);
        s.fitness = eval(s);
        population.push_back(std::move(s));
    }
    while (!rec.exhausted()) {
        const auto best_at = std::min_element(
            population.begin(), population.end(),
            [](const State& a, const State& b) { return a.fitness < b.fitness; });
        std::vector<State> next;
        next.reserve(population.size());
        next.push_back(*best_at);  // elitism of one, no re-evaluation
        while (next.size() < population.size() && !rec.exhausted()) {
            const State& a = population[tournament(population, cfg.ga_tournament, rng)];
            const State& b = population[tournament(population, cfg.ga_tournament, rng)];
            State child = rng.coin(cfg.ga_crossover_rate) ? crossover(a, b, rng) : a;
            mutate(child, rng);
            child.fitness = eval(child);
            next.push_back(std::move(child));
        }
        if (next.size() < population.size()) {
            // Budget ran out mid-generation: keep the strongest survivors.
            std::sort(population.begin(), population.end(),
                      [](const State& x, const State& y) { return x.fitness < y.fitness; });
            for (std::size_t i = 0; next.size() < population.size(); ++i)
                next.push_back(population[i]);
        }
        population = std::move(next);
    }
}

// ---- DE (rand/1/bin) ----------------------------------------------------------

void run_de(const BaselineConfig& cfg, const Objective& objective, ProgressRecorder& rec,
            Rng& rng) {
    const std::size_t dim = objective.space.dimension();
    const std::size_t np = static_cast<std::size_t>(cfg.de_population);
    std::vector<RealVector> population;
    population.reserve(np);
    for (std::size_t i = 0; i < np && !rec.exhausted(); ++i) {
        RealVector v{objective.space.sample_uniform(rng)};
        v.fitness = rec.observe(objective.continuous(v.x));
        population.push_back(std::move(v));
    }
    while (!rec.exhausted()) {
        for (std::size_t i = 0; i < population.size() && !rec.exhausted(); ++i) {
            std::size_t a, b, c;
            do a = rng.index(np); while (a == i);
            do b = rng.index(np); while (b == i || b == a);
            do c = rng.index(np); while (c == i || c == a || c == b);
            const std::size_t j_rand = rng.index(dim);
            std::vector<double> trial = population[i].x;
            for (std::size_t d = 0; d < dim; ++d) {
                if (d == j_rand || rng.coin(cfg.de_crossover)) {
                    trial[d] = population[a].x[d] +
                               cfg.de_weight * (population[b].x[d] - population[c].x[d]);
                    trial[d] = std::clamp(trial[d], objective.space.lower()[d],
                                          objective.space.upper()[d]);
                }
            }
            const double f = rec.observe(objective.continuous(trial));
            if (f <= population[i].fitness) {
                population[i].x = std::move(trial);
                population[i].fitness = f;
            }
        }
    }
}

// ---- PSO (global-best topology) ------------------------------------------------

void run_pso(const BaselineConfig& cfg, const Objective& objective, ProgressRecorder& rec,
             Rng& rng) {
    const std::size_t dim = objective.space.dimension();
    struct Particle {
        std::vector<double> x, v, best_x;
        double best_f = std::numeric_limits<double>::infinity();
    };
    std::vector<Particle> swarm(static_cast<std::size_t>(cfg.pso_swarm));
    std::vector<double> gbest;
    double gbest_f = std::numeric_limits<double>::infinity();
    for (Particle& p : swarm) {
        p.x = objective.space.sample_uniform(rng);
        p.v.assign(dim, 0.0);
        p.best_x = p.x;
        if (rec.exhausted()) continue;
        p.best_f = rec.observe(objective.continuous(p.x));
        if (p.best_f < gbest_f) {
            gbest_f = p.best_f;
            gbest = p.x;
        }
    }
    while (!rec.exhausted()) {
        for (Particle& p : swarm) {
            if (rec.exhausted()) break;
            for (std::size_t d = 0; d < dim; ++d) {
                p.v[d] = cfg.pso_inertia * p.v[d] +
                         cfg.pso_c1 * rng.uniform() * (p.best_x[d] - p.x[d]) +
                         cfg.pso_c2 * rng.uniform() * (gbest[d] - p.x[d]);
                p.x[d] += p.v[d];
                if (p.x[d] < objective.space.lower()[d]) {
                    p.x[d] = objective.space.lower()[d];
                    p.v[d] = 0.0;
                } else if (p.x[d] > objective.space.upper()[d]) {
                    p.x[d] = objective.space.upper()[d];
                    p.v[d] = 0.0;
                }
            }
            const double f = rec.observe(objective.continuous(p.x));
            if (f < p.best_f) {
                p.best_f = f;
                p.best_x = p.x;
            }
            if (f < gbest_f) {
                gbest_f = f;
                gbest = p.x;
            }
        }
    }
}

}  // namespace

BaselineAlgorithm parse_baseline(const std::string& name) {
    if (name == "hc") return BaselineAlgorithm::HC;
    if (name == "sa") return BaselineAlgorithm::SA;
    if (name == "ga") return BaselineAlgorithm::GA;
    if (name == "de") return BaselineAlgorithm::DE;
    if (name == "pso") return BaselineAlgorithm::PSO;
    throw std::invalid_argument("unknown baseline algorithm '" + name +
                                "' (expected hc, sa, ga, de or pso)");
}

std::string baseline_name(BaselineAlgorithm algorithm) {
    switch (algorithm) {
        case BaselineAlgorithm::HC: return "hc";
        case BaselineAlgorithm::SA: return "sa";
        case BaselineAlgorithm::GA: return "ga";
        case BaselineAlgorithm::DE: return "de";
        case BaselineAlgorithm::PSO: return "pso";
    }
    throw std::invalid_argument("unknown baseline algorithm tag");
}

void BaselineConfig::validate() const {
    if (hc_sigma_fraction <= 0.0) throw std::invalid_argument("hc_sigma_fraction must be > 0");
    if (sa_initial_temperature <= 0.0) throw std::invalid_argument("sa_initial_temperature must be > 0");
    if (sa_cooling <= 0.0 || sa_cooling > 1.0) throw std::invalid_argument("sa_cooling must lie in (0, 1]");
    if (ga_population < 2 || de_population < 4 || pso_swarm < 1)
        throw std::invalid_argument("population sizes too small");
    if (ga_crossover_rate < 0.0 || ga_crossover_rate > 1.0 || ga_mutation_rate < 0.0 ||
        ga_mutation_rate > 1.0 || de_crossover < 0.0 || de_crossover > 1.0)
        throw std::invalid_argument("rates must lie in [0, 1]");
    if (ga_tournament < 1) throw std::invalid_argument("ga_tournament must be >= 1");
}

long long BaselineConfig::minimum_budget() const {
    switch (algorithm) {
        case BaselineAlgorithm::HC:
        case BaselineAlgorithm::SA: return 1;
        case BaselineAlgorithm::GA: return ga_population;
        case BaselineAlgorithm::DE: return de_population;
        case BaselineAlgorithm::PSO: return pso_swarm;
    }
    return 1;
}

double sa_temperature(double initial_temperature, double cooling, long long evaluations) {
    return initial_temperature * std::pow(cooling, static_cast<double>(evaluations));
}

bool sa_accept(double delta, double temperature, Rng& rng) {
    if (delta <= 0.0) return true;
    if (temperature <= 0.0) return false;
    return rng.uniform() < std::exp(-delta / temperature);
}

RunRecord run_baseline(const BaselineConfig& config, const Objective& objective, long long budget,
                       std::uint64_t seed) {
    config.validate();
    if (budget < config.minimum_budget())
        throw std::invalid_argument("run_baseline: budget must cover the initial population");

    const auto started = std::chrono::steady_clock::now();
    ProgressRecorder rec(budget);
    Rng rng(substream_seed({seed, fnv1a64(baseline_name(config.algorithm))}));
    const bool binary = objective.binary_length > 0 && objective.binary != nullptr;
    const std::size_t nbits = objective.binary_length;

    const auto eval_bits = [&](const Genome& g) { return rec.observe(objective.binary(g.bits)); };
    const auto init_bits = [&](Rng& r) { return Genome{random_bits(nbits, r)}; };
    const auto eval_real = [&](const RealVector& v) { return rec.observe(objective.continuous(v.x)); };
    const auto init_real = [&](Rng& r) { return RealVector{objective.space.sample_uniform(r)}; };

    switch (config.algorithm) {
        case BaselineAlgorithm::HC:
            if (binary) run_hc<Genome>(config, objective, rec, rng, eval_bits, init_bits);
            else run_hc<RealVector>(config, objective, rec, rng, eval_real, init_real);
            break;
        case BaselineAlgorithm::SA:
            if (binary) run_sa<Genome>(config, objective, rec, rng, eval_bits, init_bits);
            else run_sa<RealVector>(config, objective, rec, rng, eval_real, init_real);
            break;
        case BaselineAlgorithm::GA:
            if (binary) {
                run_ga<Genome>(
                    config, rec, rng, eval_bits, init_bits,
                    [](const Genome& a, const Genome& b, Rng& r) {
                        Genome child = a;
                        for (std::size_t i = 0; i < child.bits.size(); ++i)
                            if (r.coin(0.5)) child.bits[i] = b.bits[i];
                        return child;
                    },
                    [&](Genome& g, Rng& r) {
                        for (auto& bit : g.bits)
                            if (r.coin(config.ga_mutation_rate)) bit ^= 1;
                    });
            } else {
                run_ga<RealVector>(
                    config, rec, rng, eval_real, init_real,
                    [](const RealVector& a, const RealVector& b, Rng& r) {
                        RealVector child = a;
                        for (std::size_t d = 0; d < child.x.size(); ++d)
                            if (r.coin(0.5)) child.x[d] = b.x[d];
                        return child;
                    },
                    [&](RealVector& v, Rng& r) {
                        for (std::size_t d = 0; d < v.x.size(); ++d) {
                            if (!r.coin(config.ga_mutation_rate)) continue;
                            v.x[d] += r.normal(0.0, config.ga_mutation_sigma_fraction *
                                                        objective.space.range(d));
                            v.x[d] = std::clamp(v.x[d], objective.space.lower()[d],
                                                objective.space.upper()[d]);
                        }
                    });
            }
            break;
        case BaselineAlgorithm::DE: run_de(config, objective, rec, rng); break;
        case BaselineAlgorithm::PSO: run_pso(config, objective, rec, rng); break;
    }
    rec.finalize();

    RunRecord record;
    record.algorithm = baseline_name(config.algorithm);
    record.seed = seed;
    record.trace = rec.trace();
    record.final_fitness = rec.best();
    record.evaluations = rec.used();
    record.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return record;
}

}  // namespace octo
