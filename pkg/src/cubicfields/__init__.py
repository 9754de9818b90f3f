"""Cubic residue graphs, Kummer valuations and 3-class ranks of cyclic cubic fields."""

from .conductors import (
    Conductor,
    count_unramified_cyclic_cubic,
    enumerate_conductors,
    multiplicity,
    validate_conductor,
)
from .eisenstein import (
    EisensteinInt,
    cubic_residue_exponent,
    factor_in_eisenstein,
    is_cube_mod_oracle,
    sieve_primes_1mod3,
)
from .graphs import (
    build_graph,
    classify,
    classify_t3,
    classify_t4,
    graph_invariants,
    in_range,
    predict_rank_distribution,
    subquartet_distribution,
)
from .kummer import compute_alpha, solve_norm_equation, valuation_vector
from .survey import classify_conductor, run_survey, stats
from .system_matrix import build_matrix, multiplet_rank_profile, rank_f3
from .theorems import check_theorem_A, check_theorem_B, check_theorem_C, check_theorem_D

__version__ = "0.1.0"

__all__ = [
    "Conductor",
    "EisensteinInt",
    "build_graph",
    "build_matrix",
    "check_theorem_A",
    "check_theorem_B",
    "check_theorem_C",
    "check_theorem_D",
    "classify",
    "classify_conductor",
    "classify_t3",
    "classify_t4",
    "compute_alpha",
    "count_unramified_cyclic_cubic",
    "cubic_residue_exponent",
    "enumerate_conductors",
    "factor_in_eisenstein",
    "graph_invariants",
    "in_range",
    "is_cube_mod_oracle",
    "multiplet_rank_profile",
    "multiplicity",
    "predict_rank_distribution",
    "rank_f3",
    "run_survey",
    "sieve_primes_1mod3",
    "solve_norm_equation",
    "stats",
    "subquartet_distribution",
    "validate_conductor",
    "valuation_vector",
]
