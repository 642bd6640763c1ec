"""Greedy dominating-set approximation on biclique-free graphs.

Solvers, exact oracles, biclique detection, an approximation-preserving
set-cover reduction, seeded instance generators, and a CLI/benchmark
harness. The bitmask inner loops run on a compiled extension when it
built, with a pure-Python fallback (`domset._kernels.BACKEND` says
which one is active).
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .errors import (
    DomsetError,
    GenerationError,
    ParseError,
    RangeError,
    ResourceLimitError,
    ValidationError,
)
from .generators import (
    GenSpec,
    SplitMix64,
    gen_d_degenerate,
    gen_gnp,
    gen_grid,
    gen_intersection_one,
    gen_random_tree,
)
from .graph import (
    Graph,
    closed_neighborhood,
    is_dominating,
    parse_graph,
    serialize_graph,
    validate,
)
from .oracles import (
    OracleResult,
    enumerate_min_dominating_sets,
    exact_min_dominating_set,
    harmonic,
    has_biclique,
)
from .reduction import (
    ReducedInstance,
    SetCoverInstance,
    build_instance,
    forward_solution,
    map_solution_back,
    parse_set_cover,
    reduce_set_cover,
    serialize_set_cover,
    validate_intersection_one,
)
from .solvers import (
    BicliqueWitness,
    GreedyTrace,
    Round,
    SolveResult,
    solve_auto,
    solve_classical,
    solve_fixed_i,
    solve_hybrid,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    "DomsetError",
    "ParseError",
    "RangeError",
    "ValidationError",
    "GenerationError",
    "ResourceLimitError",
    "Graph",
    "parse_graph",
    "serialize_graph",
    "closed_neighborhood",
    "is_dominating",
    "validate",
    "Round",
    "GreedyTrace",
    "SolveResult",
    "BicliqueWitness",
    "solve_classical",
    "solve_fixed_i",
    "solve_auto",
    "solve_hybrid",
    "verify_witness",
    "OracleResult",
    "exact_min_dominating_set",
    "enumerate_min_dominating_sets",
    "has_biclique",
    "harmonic",
    "SetCoverInstance",
    "ReducedInstance",
    "build_instance",
    "validate_intersection_one",
    "parse_set_cover",
    "serialize_set_cover",
    "reduce_set_cover",
    "map_solution_back",
    "forward_solution",
    "GenSpec",
    "SplitMix64",
    "gen_gnp",
    "gen_grid",
    "gen_random_tree",
    "gen_d_degenerate",
    "gen_intersection_one",
]
