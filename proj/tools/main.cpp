// octoswarm command-line tool: benchmark drivers, single runs, ranking and
// re-export of persisted results.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "octo/config_file.hpp"
#include "octo/harness.hpp"
#include "octo/io.hpp"
#include "octo/nk.hpp"
#include "octo/problem.hpp"
#include "octo/protein.hpp"
#include "octo/ranking.hpp"

namespace fs = std::filesystem;
using namespace octo;

namespace {

struct CommonOptions {
    std::uint64_t seed = 1;
    long long budget = 20000;
    int repeats = 10;
    std::vector<std::string> algorithms = default_algorithms();
    std::string output;
    std::string config_path;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_plan_flags = true) {
    cmd->add_option("--seed", opt.seed, "Master seed")->capture_default_str();
    cmd->add_option("--budget", opt.budget, "Evaluation budget per run")->capture_default_str();
    if (with_plan_flags) {
        cmd->add_option("--repeats", opt.repeats, "Independent runs per algorithm and problem")
            ->capture_default_str();
        cmd->add_option("--algorithms", opt.algorithms,
                        "Algorithms to run (oio, hc, sa, ga, de, pso)")
            ->delimiter(',')
            ->capture_default_str();
        cmd->add_option("--jobs", opt.jobs, "Concurrent runs")->capture_default_str();
    }
    cmd->add_option("-o,--output", opt.output,
                    "Output directory (default: $OCTOSWARM_OUTPUT_DIR or ./results/<command>)");
    cmd->add_option("--config", opt.config_path,
                    "Key-value file overriding optimizer hyperparameters");
}

fs::path resolve_output(const CommonOptions& opt, const std::string& leaf) {
    if (!opt.output.empty()) return opt.output;
    if (const char* env = std::getenv("OCTOSWARM_OUTPUT_DIR")) return fs::path(env) / leaf;
    return fs::path("results") / leaf;
}

void validate_common(const CommonOptions& opt) {
    if (opt.budget < 1) throw std::invalid_argument("--budget must be >= 1");
    if (opt.repeats < 1) throw std::invalid_argument("--repeats must be >= 1");
    if (opt.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
    for (const std::string& id : opt.algorithms)
        if (!is_known_algorithm(id))
            throw std::invalid_argument("unknown algorithm '" + id +
                                        "'; valid: oio, hc, sa, ga, de, pso");
}

ExperimentPlan make_plan(const CommonOptions& opt, std::vector<Problem> problems) {
    ExperimentPlan plan;
    plan.algorithms = opt.algorithms;
    plan.problems = std::move(problems);
    plan.repeats = opt.repeats;
    plan.budget = opt.budget;
    if (!opt.config_path.empty()) load_config_file(opt.config_path, plan.oio, plan.baselines);
    return plan;
}

void print_summary(std::ostream& out, const std::vector<RunRecord>& records,
                   const std::vector<Problem>& problems) {
    const auto rows = summarize(records);
    out << "\n  " << std::left << std::setw(24) << "problem" << std::setw(8) << "algo"
        << std::right << std::setw(14) << "mean best" << std::setw(14) << "median" << '\n';
    for (const auto& row : rows) {
        // Display in the problem's native direction.
        double sign = 1.0;
        for (const Problem& p : problems)
            if (p.id == row.problem && p.direction == Direction::Maximize) sign = -1.0;
        out << "  " << std::left << std::setw(24) << row.problem << std::setw(8) << row.algorithm
            << std::right << std::setw(14) << sign * row.mean << std::setw(14)
            << sign * row.median << '\n';
    }
}

// Shared tail of every bench command: run, persist, rank, summarize.
int run_bench(const CommonOptions& opt, std::vector<Problem> problems, const fs::path& out_dir) {
    validate_common(opt);
    const ExperimentPlan plan = make_plan(opt, std::move(problems));
    const auto records = run_experiment(plan, opt.seed, opt.jobs);

    export_results(out_dir, records);
    write_ranking_csv(out_dir / "ranking.csv", cec_rank(records));
    write_ranking_json(out_dir / "ranking.json", cec_rank(records));
    write_summary_csv(out_dir / "summary.csv", summarize(records));
    write_summary_json(out_dir / "summary.json", summarize(records));

    print_summary(std::cout, records, plan.problems);
    std::cout << "\nwrote " << records.size() << " runs to " << out_dir.string() << '\n';

    for (const RunRecord& r : records)
        if (r.budget_fault) {
            std::cerr << "budget fault: " << r.algorithm << " on " << r.problem << " seed "
                      << r.seed << '\n';
            return 2;
        }
    return 0;
}

std::vector<std::string> nk_config_names() {
    std::vector<std::string> names;
    for (const auto& c : nk_benchmark_configs()) names.push_back(c.name);
    return names;
}

Problem make_nk_problem(const std::string& config_name, std::uint64_t master_seed,
                        std::uint64_t instance_seed_override, bool have_override) {
    for (const auto& c : nk_benchmark_configs()) {
        if (c.name != config_name) continue;
        const std::uint64_t instance_seed =
            have_override ? instance_seed_override
                          : substream_seed({master_seed, fnv1a64("nk-instance"), fnv1a64(c.name)});
        auto nk = std::make_shared<NkLandscape>(NkLandscape::generate(c.n, c.k, instance_seed));
        return nk_problem(std::move(nk), "nk-" + c.name + "-n" + std::to_string(c.n) + "-k" +
                                             std::to_string(c.k));
    }
    throw std::invalid_argument("unknown NK configuration '" + config_name +
                                "'; valid: simple, medium, hard, harder, complex");
}

// Decodes the best sequence of one algorithm's best run by deterministic
// replay with a tracking objective.
struct BestSequence {
    std::string sequence;
    double fitness = 0.0;
};

BestSequence replay_best_sequence(const std::string& algorithm, const Problem& problem,
                                  const std::shared_ptr<const EmpiricalLandscape>& landscape,
                                  const ExperimentPlan& plan, std::uint64_t seed) {
    const ProteinCodec codec(static_cast<int>(landscape->wild_type.size()));
    auto best = std::make_shared<BestSequence>();
    best->fitness = -std::numeric_limits<double>::infinity();

    Problem tracked = problem;
    tracked.fn = [landscape, codec, best](std::span<const double> x) {
        const std::string sequence = codec.decode(x);
        const double f = landscape->fitness(sequence);
        if (f > best->fitness) {
            best->fitness = f;
            best->sequence = sequence;
        }
        return f;
    };
    run_single(algorithm, tracked, plan.budget, seed, plan.oio, plan.baselines);
    return *best;
}

int cmd_bench_nk(const CommonOptions& opt, const std::vector<std::string>& configs,
                 std::uint64_t instance_seed, bool have_instance_seed) {
    std::vector<Problem> problems;
    const auto wanted = configs.empty() ? nk_config_names() : configs;
    for (const std::string& name : wanted)
        problems.push_back(make_nk_problem(name, opt.seed, instance_seed, have_instance_seed));
    return run_bench(opt, std::move(problems), resolve_output(opt, "bench-nk"));
}

int cmd_bench_continuous(const CommonOptions& opt, const std::vector<std::string>& functions,
                         int dimension) {
    std::vector<Problem> problems;
    const auto wanted = functions.empty() ? continuous_suite_names() : functions;
    for (const std::string& name : wanted) problems.push_back(continuous_suite(name, dimension));
    return run_bench(opt, std::move(problems), resolve_output(opt, "bench-continuous"));
}

int cmd_bench_protein(const CommonOptions& opt, const std::string& dataset,
                      const std::string& wild_type, double penalty) {
    validate_common(opt);
    std::ifstream in(dataset);
    if (!in) throw IoError("cannot read dataset '" + dataset + "'");
    EmpiricalFormat format;
    format.unknown_penalty = penalty;
    if (!wild_type.empty()) format.wild_type = wild_type;
    auto landscape = std::make_shared<const EmpiricalLandscape>(load_empirical(in, format));

    const std::string id = "protein-" + fs::path(dataset).stem().string();
    const Problem problem = protein_problem(landscape, id);
    const fs::path out_dir = resolve_output(opt, "bench-protein");
    const int status = run_bench(opt, {problem}, out_dir);

    // Report each algorithm's best sequence (best run, replayed).
    const ExperimentPlan plan = make_plan(opt, {});
    const auto records = read_results_dir(out_dir);
    std::ofstream sequences(out_dir / "best_sequences.txt");
    for (const std::string& algorithm : opt.algorithms) {
        const RunRecord* best_run = nullptr;
        for (const RunRecord& r : records)
            if (r.algorithm == algorithm && (!best_run || r.final_fitness < best_run->final_fitness))
                best_run = &r;
        if (!best_run) continue;
        const auto best =
            replay_best_sequence(algorithm, problem, landscape, plan, best_run->seed);
        sequences << algorithm << '\t' << best.sequence << '\t' << format_double(best.fitness)
                  << '\n';
        std::cout << "  best " << algorithm << ": " << best.sequence << "  fitness "
                  << best.fitness << '\n';
    }
    return status;
}

int cmd_run(const CommonOptions& opt, const std::string& algorithm, const std::string& problem_name,
            int dimension, const std::string& dataset, std::uint64_t instance_seed,
            bool have_instance_seed) {
    CommonOptions single = opt;
    single.repeats = 1;
    single.algorithms = {algorithm};
    validate_common(single);

    Problem problem = [&] {
        if (problem_name.rfind("nk-", 0) == 0)
            return make_nk_problem(problem_name.substr(3), opt.seed, instance_seed,
                                   have_instance_seed);
        if (problem_name == "protein") {
            std::ifstream in(dataset);
            if (!in) throw IoError("cannot read dataset '" + dataset + "'");
            auto landscape = std::make_shared<const EmpiricalLandscape>(load_empirical(in));
            return protein_problem(landscape, "protein-" + fs::path(dataset).stem().string());
        }
        return continuous_suite(problem_name, dimension);
    }();

    return run_bench(single, {std::move(problem)}, resolve_output(opt, "run"));
}

int cmd_rank(const std::string& input, const std::string& output) {
    const auto records = read_results_dir(input);
    const RankingTable table = cec_rank(records);
    const fs::path out_dir = output.empty() ? fs::path(input) : fs::path(output);
    write_ranking_csv(out_dir / "ranking.csv", table);
    write_ranking_json(out_dir / "ranking.json", table);
    std::cout << std::left << std::setw(8) << "rank" << std::setw(10) << "algorithm"
              << "total\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        std::cout << std::left << std::setw(8) << i + 1 << std::setw(10)
                  << table.rows[i].algorithm << table.rows[i].total << '\n';
    return 0;
}

int cmd_export(const std::string& input, const std::string& output, const std::string& format) {
    const auto records = read_results_dir(input);
    const fs::path out_dir = output.empty() ? fs::path(input) : fs::path(output);
    if (format == "csv") export_results(out_dir, records, true, false);
    else if (format == "json") export_results(out_dir, records, false, true);
    else throw std::invalid_argument("unknown format '" + format + "' (expected csv or json)");
    write_summary_csv(out_dir / "summary.csv", summarize(records));
    write_summary_json(out_dir / "summary.json", summarize(records));
    std::cout << "exported " << records.size() << " runs to " << out_dir.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"octoswarm: octopus-inspired optimization toolkit"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* bench_nk = app.add_subcommand("bench-nk", "NK-landscape benchmark");
    std::vector<std::string> nk_configs;
    std::uint64_t instance_seed = 0;
    add_common(bench_nk, opt);
    bench_nk->add_option("--configs", nk_configs,
                         "NK configurations (simple, medium, hard, harder, complex)")
        ->delimiter(',');
    auto* instance_opt =
        bench_nk->add_option("--instance-seed", instance_seed,
                             "Explicit landscape seed (default: derived from --seed)");

    auto* bench_cont = app.add_subcommand("bench-continuous", "Continuous benchmark suite");
    std::vector<std::string> functions;
    int dimension = 10;
    add_common(bench_cont, opt);
    bench_cont->add_option("--functions", functions, "Suite functions to run")->delimiter(',');
    bench_cont->add_option("--dimension", dimension, "Problem dimension")->capture_default_str();

    auto* bench_prot = app.add_subcommand("bench-protein", "Tabular protein landscape benchmark");
    std::string dataset, wild_type;
    double penalty = -0.1;
    add_common(bench_prot, opt);
    bench_prot->add_option("--dataset", dataset, "Tab-separated landscape table")->required();
    bench_prot->add_option("--wild-type", wild_type, "Reference sequence for mutation notation");
    bench_prot->add_option("--penalty", penalty, "Additive penalty for unknown substitutions")
        ->capture_default_str();

    auto* run = app.add_subcommand("run", "Single optimizer run");
    std::string run_algorithm = "oio", run_problem = "sphere";
    int run_dimension = 10;
    std::string run_dataset;
    std::uint64_t run_instance_seed = 0;
    add_common(run, opt, false);
    run->add_option("--algorithm", run_algorithm, "Algorithm id")->capture_default_str();
    run->add_option("--problem", run_problem,
                    "Problem id (suite function, nk-<config> or protein)")
        ->capture_default_str();
    run->add_option("--dimension", run_dimension, "Dimension for suite functions")
        ->capture_default_str();
    run->add_option("--dataset", run_dataset, "Protein dataset (with --problem protein)");
    auto* run_instance_opt =
        run->add_option("--instance-seed", run_instance_seed, "Explicit NK landscape seed");

    auto* rank = app.add_subcommand("rank", "Re-rank persisted results");
    std::string rank_input, rank_output;
    rank->add_option("--input", rank_input, "Results directory")->required();
    rank->add_option("-o,--output", rank_output, "Destination (default: the input directory)");

    auto* exp = app.add_subcommand("export", "Re-export persisted results");
    std::string exp_input, exp_output, exp_format = "json";
    exp->add_option("--input", exp_input, "Results directory")->required();
    exp->add_option("-o,--output", exp_output, "Destination (default: the input directory)");
    exp->add_option("--format", exp_format, "csv or json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (bench_nk->parsed())
            return cmd_bench_nk(opt, nk_configs, instance_seed, instance_opt->count() > 0);
        if (bench_cont->parsed()) return cmd_bench_continuous(opt, functions, dimension);
        if (bench_prot->parsed()) return cmd_bench_protein(opt, dataset, wild_type, penalty);
        if (run->parsed())
            return cmd_run(opt, run_algorithm, run_problem, run_dimension, run_dataset,
                           run_instance_seed, run_instance_opt->count() > 0);
        if (rank->parsed()) return cmd_rank(rank_input, rank_output);
        if (exp->parsed()) return cmd_export(exp_input, exp_output, exp_format);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
