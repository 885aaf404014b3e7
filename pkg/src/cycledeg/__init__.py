"""Oriented graphs with pairwise-distinct directed-cycle degrees.

The package bundles four cooperating layers:

* :mod:`cycledeg.digraph` and :mod:`cycledeg.census` hold the oriented-graph
  value type and a brute-force directed-cycle census;
* :mod:`cycledeg.families` and :mod:`cycledeg.formulas` construct the graph
  families with known cycle-degree behavior and predict their degrees in
  closed form;
* :mod:`cycledeg.search` scans every labeled oriented graph of a small order
  for extremal degree facts;
* :mod:`cycledeg.serialize`, :mod:`cycledeg.verify` and :mod:`cycledeg.cli`
  provide file formats, the prediction-versus-census driver, and the
  command-line front end.
"""
from .census import (
    CycleLengthTooSmall,
    CycleWitness,
    DegreeProfile,
    degree_profile,
    enumerate_cycles,
    is_irregular,
)
from .digraph import (
    GraphError,
    LoopArc,
    NotBijective,
    OrientedGraph,
    OutOfRange,
    SymmetricPair,
    make_graph,
)
from .families import (
    FAMILIES,
    BadParameters,
    FamilySpec,
    build,
    gen_a,
    gen_b2l2,
    gen_b7,
    gen_b8,
    gen_b10,
    gen_d4m2,
    gen_d4m4,
    gen_d10,
    gen_d12,
)
from .formulas import (
    PredictedProfile,
    a_irregularity_criterion,
    binom,
    family_a_profile,
    family_b_profile,
    family_d4m2_profile,
    family_d4m4_profile,
    max_triangle_degree_bound,
)
from .search import (
    DEFAULT_ORDER_CAP,
    HARD_ORDER_CAP,
    LONG_RUN_ENV,
    OrderTooLarge,
    SearchReport,
    enumerate_oriented_graphs,
    exists_irregular,
    graph_count,
    graph_from_index,
    index_of_graph,
    max_degree_sum,
    max_vertex_degree,
    pair_list,
)
from .serialize import ParseError, emit_graph, parse_graph
from .verify import REFERENCE_TABLES, VerificationReport, verify_family

__version__ = "0.1.0"

__all__ = [
    "OrientedGraph",
    "make_graph",
    "GraphError",
    "LoopArc",
    "SymmetricPair",
    "OutOfRange",
    "NotBijective",
    "CycleWitness",
    "DegreeProfile",
    "CycleLengthTooSmall",
    "enumerate_cycles",
    "degree_profile",
    "is_irregular",
    "FamilySpec",
    "FAMILIES",
    "BadParameters",
    "build",
    "gen_a",
    "gen_b7",
    "gen_b8",
    "gen_b10",
    "gen_b2l2",
    "gen_d10",
    "gen_d12",
    "gen_d4m2",
    "gen_d4m4",
    "binom",
    "PredictedProfile",
    "family_a_profile",
    "family_b_profile",
    "family_d4m2_profile",
    "family_d4m4_profile",
    "a_irregularity_criterion",
    "max_triangle_degree_bound",
    "SearchReport",
    "OrderTooLarge",
    "DEFAULT_ORDER_CAP",
    "HARD_ORDER_CAP",
    "LONG_RUN_ENV",
    "graph_count",
    "pair_list",
    "graph_from_index",
    "index_of_graph",
    "enumerate_oriented_graphs",
    "max_degree_sum",
    "max_vertex_degree",
    "exists_irregular",
    "ParseError",
    "parse_graph",
    "emit_graph",
    "VerificationReport",
    "REFERENCE_TABLES",
    "verify_family",
]
