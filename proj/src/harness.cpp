#include "octo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <stdexcept>
#include <thread>

namespace octo {

const std::vector<std::string>& default_algorithms() {
    static const std::vector<std::string> ids = {"oio", "hc", "sa", "ga", "de", "pso"};
    return ids;
}

bool is_known_algorithm(const std::string& id) {
    const auto& ids = default_algorithms();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::uint64_t run_seed(std::uint64_t master_seed, const std::string& algorithm,
                       const std::string& problem, int repeat) {
    return substream_seed(
        {master_seed, fnv1a64(algorithm), fnv1a64(problem), static_cast<std::uint64_t>(repeat)});
}

RunRecord run_guarded(const std::function<RunRecord(const Objective&)>& runner,
                      const Objective& view, long long budget) {
    // Hard budget guard: the optimizers self-limit through their recorders;
    // the guard catches any that do not.
    auto calls = std::make_shared<long long>(0);
    Objective guarded = view;
    guarded.continuous = [fn = view.continuous, calls, budget](std::span<const double> x) {
        if (*calls >= budget) throw BudgetExhausted(budget);
        ++*calls;
        return fn(x);
    };
    if (view.binary)
        guarded.binary = [fn = view.binary, calls, budget](std::span<const std::uint8_t> g) {
            if (*calls >= budget) throw BudgetExhausted(budget);
            ++*calls;
            return fn(g);
        };

    try {
        return runner(guarded);
    } catch (const BudgetExhausted&) {
        RunRecord record;
        record.evaluations = *calls;
        record.budget_fault = true;
        record.trace = {{*calls, std::numeric_limits<double>::infinity()}};
        record.final_fitness = std::numeric_limits<double>::infinity();
        return record;
    }
}

RunRecord run_single(const std::string& algorithm, const Problem& problem, long long budget,
                     std::uint64_t seed, const OioConfig& oio_config,
                     const BaselineConfig& baseline_config, OioStats* stats_out) {
    if (!is_known_algorithm(algorithm))
        throw std::invalid_argument("unknown algorithm '" + algorithm + "'");

    RunRecord record = run_guarded(
        [&](const Objective& guarded) {
            if (algorithm == "oio")
                return optimize_oio(guarded.continuous, problem.space, oio_config, budget, seed,
                                    stats_out);
            BaselineConfig cfg = baseline_config;
            cfg.algorithm = parse_baseline(algorithm);
            return run_baseline(cfg, guarded, budget, seed);
        },
        minimizing_view(problem), budget);
    record.algorithm = algorithm;
    record.seed = seed;
    record.problem = problem.id;
    return record;
}

std::vector<RunRecord> run_experiment(const ExperimentPlan& plan, std::uint64_t master_seed,
                                      int parallelism) {
    if (plan.repeats < 1) throw std::invalid_argument("run_experiment: repeats must be >= 1");
    if (plan.problems.empty() || plan.algorithms.empty())
        throw std::invalid_argument("run_experiment: empty plan");
    for (const std::string& id : plan.algorithms)
        if (!is_known_algorithm(id))
            throw std::invalid_argument("unknown algorithm '" + id + "'");

    struct Task {
        const Problem* problem;
        const std::string* algorithm;
        int repeat;
    };
    std::vector<Task> tasks;
    for (const Problem& problem : plan.problems)
        for (const std::string& algorithm : plan.algorithms)
            for (int r = 0; r < plan.repeats; ++r) tasks.push_back({&problem, &algorithm, r});

    std::vector<RunRecord> records(tasks.size());
    const auto worker_body = [&](std::atomic<std::size_t>& cursor) {
        for (std::size_t i = cursor.fetch_add(1); i < tasks.size(); i = cursor.fetch_add(1)) {
            const Task& task = tasks[i];
            const std::uint64_t seed =
                run_seed(master_seed, *task.algorithm, task.problem->id, task.repeat);
            records[i] = run_single(*task.algorithm, *task.problem, plan.budget, seed, plan.oio,
                                    plan.baselines);
        }
    };

    const int workers = std::max(1, parallelism);
    if (workers == 1) {
        std::atomic<std::size_t> cursor{0};
        worker_body(cursor);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back([&] { worker_body(cursor); });
        for (std::thread& t : pool) t.join();
    }
    return records;
}

}  // namespace octo
