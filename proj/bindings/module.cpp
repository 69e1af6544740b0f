// Python bindings for the octoswarm core: problems, optimizers, the
// experiment harness and competition-style ranking.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "octo/harness.hpp"
#include "octo/io.hpp"
#include "octo/nk.hpp"
#include "octo/problem.hpp"
#include "octo/protein.hpp"
#include "octo/ranking.hpp"

namespace py = pybind11;
using namespace octo;

namespace {

Problem make_problem(std::string id, std::vector<double> lower, std::vector<double> upper,
                     std::function<double(std::vector<double>)> fn, const std::string& direction) {
    Problem p{std::move(id), SearchSpace(std::move(lower), std::move(upper)),
              direction == "maximize" ? Direction::Maximize : Direction::Minimize,
              std::nullopt,
              {},
              nullptr};
    p.fn = [fn = std::move(fn)](std::span<const double> x) {
        return fn(std::vector<double>(x.begin(), x.end()));
    };
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Octopus-inspired optimization toolkit";

    py::class_<OioConfig>(m, "OioConfig")
        .def(py::init<>())
        .def_readwrite("num_tentacles", &OioConfig::num_tentacles)
        .def_readwrite("suckers_per_tentacle", &OioConfig::suckers_per_tentacle)
        .def_readwrite("iterations_per_tentacle", &OioConfig::iterations_per_tentacle)
        .def_readwrite("stagnation_threshold", &OioConfig::stagnation_threshold)
        .def_readwrite("diversity_threshold", &OioConfig::diversity_threshold)
        .def_readwrite("elite_memory_size", &OioConfig::elite_memory_size)
        .def_readwrite("levy_alpha", &OioConfig::levy_alpha)
        .def_readwrite("levy_beta", &OioConfig::levy_beta)
        .def_readwrite("elite_noise_sigma", &OioConfig::elite_noise_sigma)
        .def_readwrite("inertia", &OioConfig::inertia)
        .def_readwrite("c1", &OioConfig::c1)
        .def_readwrite("c2", &OioConfig::c2)
        .def_readwrite("c3", &OioConfig::c3)
        .def_readwrite("adaptive_coefficients", &OioConfig::adaptive_coefficients)
        .def_readwrite("master_fraction", &OioConfig::master_fraction);

    py::class_<BaselineConfig>(m, "BaselineConfig")
        .def(py::init<>())
        .def_readwrite("hc_sigma_fraction", &BaselineConfig::hc_sigma_fraction)
        .def_readwrite("sa_initial_temperature", &BaselineConfig::sa_initial_temperature)
        .def_readwrite("sa_cooling", &BaselineConfig::sa_cooling)
        .def_readwrite("ga_population", &BaselineConfig::ga_population)
        .def_readwrite("ga_crossover_rate", &BaselineConfig::ga_crossover_rate)
        .def_readwrite("ga_mutation_rate", &BaselineConfig::ga_mutation_rate)
        .def_readwrite("de_population", &BaselineConfig::de_population)
        .def_readwrite("de_weight", &BaselineConfig::de_weight)
        .def_readwrite("de_crossover", &BaselineConfig::de_crossover)
        .def_readwrite("pso_swarm", &BaselineConfig::pso_swarm)
        .def_readwrite("pso_inertia", &BaselineConfig::pso_inertia)
        .def_readwrite("pso_c1", &BaselineConfig::pso_c1)
        .def_readwrite("pso_c2", &BaselineConfig::pso_c2);

    py::class_<OioStats>(m, "OioStats")
        .def_readonly("levy_moves", &OioStats::levy_moves)
        .def_readonly("elite_moves", &OioStats::elite_moves)
        .def_readonly("pso_moves", &OioStats::pso_moves)
        .def_readonly("pull_moves", &OioStats::pull_moves)
        .def_readonly("exploration_moves_late_half", &OioStats::exploration_moves_late_half)
        .def_readonly("stagnation_regenerations", &OioStats::stagnation_regenerations)
        .def_readonly("diversity_regenerations", &OioStats::diversity_regenerations);

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("algorithm", &RunRecord::algorithm)
        .def_readonly("problem", &RunRecord::problem)
        .def_readonly("seed", &RunRecord::seed)
        .def_readonly("final_fitness", &RunRecord::final_fitness)
        .def_readonly("wall_time_s", &RunRecord::wall_time_s)
        .def_readonly("evaluations", &RunRecord::evaluations)
        .def_readonly("budget_fault", &RunRecord::budget_fault)
        .def_property_readonly("trace",
                               [](const RunRecord& r) {
                                   py::list out;
                                   for (const TracePoint& p : r.trace)
                                       out.append(py::make_tuple(p.evaluations, p.best));
                                   return out;
                               })
        .def("__repr__", [](const RunRecord& r) {
            std::ostringstream ss;
            ss << "RunRecord(" << r.algorithm << ", " << r.problem << ", seed=" << r.seed
               << ", final=" << r.final_fitness << ", evaluations=" << r.evaluations << ")";
            return ss.str();
        });

    py::class_<Problem>(m, "Problem")
        .def_readonly("id", &Problem::id)
        .def_property_readonly("dimension",
                               [](const Problem& p) { return p.space.dimension(); })
        .def_property_readonly("lower", [](const Problem& p) { return p.space.lower(); })
        .def_property_readonly("upper", [](const Problem& p) { return p.space.upper(); })
        .def_property_readonly("direction",
                               [](const Problem& p) {
                                   return p.direction == Direction::Maximize ? "maximize"
                                                                             : "minimize";
                               })
        .def_property_readonly("known_optimum",
                               [](const Problem& p) -> py::object {
                                   if (!p.known_optimum) return py::none();
                                   return py::float_(*p.known_optimum);
                               })
        .def_readonly("known_optimizer", &Problem::known_optimizer)
        .def("evaluate",
             [](const Problem& p, const std::vector<double>& x) {
                 if (x.size() != p.space.dimension())
                     throw std::invalid_argument("evaluate: dimension mismatch");
                 return p.fn(x);
             })
        .def("evaluate_binary", [](const Problem& p, const std::vector<std::uint8_t>& genome) {
            if (!p.binary_fn) throw std::invalid_argument("problem has no binary view");
            return p.binary_fn(genome);
        });

    py::class_<NkLandscape>(m, "NkLandscape")
        .def_static("generate", &NkLandscape::generate, py::arg("n"), py::arg("k"),
                    py::arg("seed"))
        .def_static("from_json", &NkLandscape::from_json)
        .def("to_json", &NkLandscape::to_json, py::arg("include_tables") = false)
        .def_property_readonly("n", &NkLandscape::n)
        .def_property_readonly("k", &NkLandscape::k)
        .def_property_readonly("seed", &NkLandscape::seed)
        .def("fitness", [](const NkLandscape& nk, const std::vector<std::uint8_t>& genome) {
            return nk.fitness(genome);
        });

    py::class_<EmpiricalLandscape, std::shared_ptr<EmpiricalLandscape>>(m, "EmpiricalLandscape")
        .def_readonly("wild_type", &EmpiricalLandscape::wild_type)
        .def_readonly("wild_type_fitness", &EmpiricalLandscape::wild_type_fitness)
        .def_readonly("unknown_penalty", &EmpiricalLandscape::unknown_penalty)
        .def("fitness",
             [](const EmpiricalLandscape& l, const std::string& sequence) {
                 return l.fitness(sequence);
             })
        .def_property_readonly("size",
                               [](const EmpiricalLandscape& l) { return l.records.size(); });

    py::class_<RankingTable>(m, "RankingTable")
        .def_readonly("problems", &RankingTable::problems)
        .def_property_readonly("rows", [](const RankingTable& t) {
            py::list out;
            for (const auto& row : t.rows) {
                py::dict d;
                d["algorithm"] = row.algorithm;
                d["total"] = row.total;
                d["per_problem"] = row.per_problem;
                out.append(d);
            }
            return out;
        });

    m.def("amino_acids", [] { return std::string(kAminoAcids); });
    m.def("binarize_sigmoid", [](const std::vector<double>& x) { return binarize_sigmoid(x); });
    m.def(
        "decode_protein",
        [](const std::vector<double>& internal, int length, const std::string& mode,
           std::uint64_t seed) {
            const ProteinCodec codec(length, mode == "sample" ? DecodeMode::Sample
                                                              : DecodeMode::Argmax);
            Rng rng(seed);
            return codec.decode(internal, &rng);
        },
        py::arg("internal"), py::arg("length"), py::arg("mode") = "argmax", py::arg("seed") = 0,
        "Decode an L*20 preference vector into an amino-acid sequence.");

    m.def("continuous_suite", &continuous_suite, py::arg("name"), py::arg("dimension"));
    m.def("continuous_suite_names", [] { return continuous_suite_names(); });
    m.def(
        "nk_problem",
        [](const NkLandscape& landscape, const std::string& id) {
            return nk_problem(std::make_shared<NkLandscape>(landscape), id);
        },
        py::arg("landscape"), py::arg("id") = "nk");
    m.def(
        "load_empirical",
        [](const std::string& text, py::object wild_type, double unknown_penalty) {
            EmpiricalFormat format;
            format.unknown_penalty = unknown_penalty;
            if (!wild_type.is_none()) format.wild_type = wild_type.cast<std::string>();
            std::istringstream in(text);
            return std::make_shared<EmpiricalLandscape>(load_empirical(in, format));
        },
        py::arg("text"), py::arg("wild_type") = py::none(), py::arg("unknown_penalty") = -0.1,
        "Parse a tab-separated sequence/fitness or mutations/fitness table.");
    m.def(
        "protein_problem",
        [](const std::shared_ptr<EmpiricalLandscape>& landscape, const std::string& id) {
            return protein_problem(landscape, id);
        },
        py::arg("landscape"), py::arg("id") = "protein");
    m.def("make_problem", &make_problem, py::arg("id"), py::arg("lower"), py::arg("upper"),
          py::arg("fn"), py::arg("direction") = "minimize",
          "Wrap a python callable as a problem (single-threaded use only).");

    m.def(
        "optimize_oio",
        [](const Problem& problem, long long budget, std::uint64_t seed, const OioConfig& config) {
            OioStats stats;
            RunRecord record = run_single("oio", problem, budget, seed, config, BaselineConfig{},
                                          &stats);
            return py::make_tuple(record, stats);
        },
        py::arg("problem"), py::arg("budget") = 20000, py::arg("seed") = 1,
        py::arg("config") = OioConfig{},
        "Run the octopus-inspired optimizer; returns (record, stats).");
    m.def(
        "run_algorithm",
        [](const std::string& algorithm, const Problem& problem, long long budget,
           std::uint64_t seed, const OioConfig& oio_config, const BaselineConfig& baselines) {
            return run_single(algorithm, problem, budget, seed, oio_config, baselines);
        },
        py::arg("algorithm"), py::arg("problem"), py::arg("budget") = 20000, py::arg("seed") = 1,
        py::arg("oio_config") = OioConfig{}, py::arg("baseline_config") = BaselineConfig{});
    m.def("algorithms", [] { return default_algorithms(); });
    m.def(
        "run_experiment",
        [](const std::vector<std::string>& algorithms, const std::vector<Problem>& problems,
           int repeats, long long budget, std::uint64_t master_seed, const OioConfig& oio_config,
           const BaselineConfig& baselines) {
            ExperimentPlan plan;
            plan.algorithms = algorithms;
            plan.problems = problems;
            plan.repeats = repeats;
            plan.budget = budget;
            plan.oio = oio_config;
            plan.baselines = baselines;
            // Serial on purpose: problems may wrap python callables.
            return run_experiment(plan, master_seed, 1);
        },
        py::arg("algorithms"), py::arg("problems"), py::arg("repeats") = 10,
        py::arg("budget") = 20000, py::arg("master_seed") = 1,
        py::arg("oio_config") = OioConfig{}, py::arg("baseline_config") = BaselineConfig{});
    m.def("run_seed", &run_seed, py::arg("master_seed"), py::arg("algorithm"), py::arg("problem"),
          py::arg("repeat"));

    m.def("cec_rank", &cec_rank, py::arg("records"));
    m.def(
        "summarize",
        [](const std::vector<RunRecord>& records) {
            py::list out;
            for (const SummaryRow& row : summarize(records)) {
                py::dict d;
                d["algorithm"] = row.algorithm;
                d["problem"] = row.problem;
                d["runs"] = row.runs;
                d["mean"] = row.mean;
                d["median"] = row.median;
                d["std"] = row.stddev;
                d["q1"] = row.q1;
                d["q3"] = row.q3;
                out.append(d);
            }
            return out;
        },
        py::arg("records"));
    m.def(
        "export_results",
        [](const std::string& directory, const std::vector<RunRecord>& records) {
            export_results(directory, records);
        },
        py::arg("directory"), py::arg("records"));
    m.def("read_results_dir",
          [](const std::string& directory) { return read_results_dir(directory); });

#ifdef OCTOSWARM_VERSION
    m.attr("__version__") = OCTOSWARM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
