"""Octopus-inspired optimization toolkit.

A hierarchical swarm optimizer (individual -> tentacles -> suckers) with
classic baselines (hill climbing, simulated annealing, a genetic algorithm,
differential evolution, particle swarm optimization), NK fitness landscapes,
a shifted/rotated continuous benchmark family, tabular protein landscapes and
a competition-style experiment harness.
"""

from ._core import (
    BaselineConfig,
    EmpiricalLandscape,
    NkLandscape,
    OioConfig,
    OioStats,
    Problem,
    RankingTable,
    RunRecord,
    __version__,
    algorithms,
    amino_acids,
    binarize_sigmoid,
    cec_rank,
    continuous_suite,
    continuous_suite_names,
    decode_protein,
    export_results,
    load_empirical,
    make_problem,
    nk_problem,
    optimize_oio,
    protein_problem,
    read_results_dir,
    run_algorithm,
    run_experiment,
    run_seed,
    summarize,
)

__all__ = [
    "BaselineConfig",
    "EmpiricalLandscape",
    "NkLandscape",
    "OioConfig",
    "OioStats",
    "Problem",
    "RankingTable",
    "RunRecord",
    "__version__",
    "algorithms",
    "amino_acids",
    "binarize_sigmoid",
    "cec_rank",
    "continuous_suite",
    "continuous_suite_names",
    "decode_protein",
    "export_results",
    "load_empirical",
    "make_problem",
    "nk_problem",
    "optimize_oio",
    "protein_problem",
    "read_results_dir",
    "run_algorithm",
    "run_experiment",
    "run_seed",
    "summarize",
]
