"""Stable graphs, maximal weak subgraphs and the contraction partition."""

from .enumeration import (
    BudgetExceededError,
    EnumerationError,
    GraphFamily,
    GraphShape,
    UnstableParametersError,
    WeightStrategy,
    enumerate_family,
    enumerate_shapes,
    family_stats,
    phi_fibers,
)
from .graph import (
    FullSubgraph,
    GraphError,
    StableGraph,
    VertexBoundError,
    automorphisms,
    canonical_form,
    canonical_graph,
    contract_edge,
    contraction_map,
    full_subgraph,
    genus,
    is_isomorphic,
    validate,
)
from .kernels import BACKEND
from .stg import STGError, dump, dumps, load, loads
from .verify import SUITES, VerificationReport, brute_force_oracle, check_graph, run_paper_examples, run_suite
from .weak import (
    ContextMismatchError,
    EdgeBoundError,
    IndexVector,
    NotFixedPointError,
    WeakParams,
    codimension,
    index_vector,
    is_phi_fixed,
    is_weak,
    maximal_weak_subgraph,
    part_order_geq,
    phi_map,
    stabilize,
    strong_vertices,
)

__version__ = "0.1.0"
