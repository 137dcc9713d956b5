"""Exact multicut, multi-cluster cut and multiterminal cut for planar graphs
whose terminals all lie on the outer face."""

from .clustering import Clustering, StructureChoice, check_noncrossing, enumerate_clusterings, enumerate_structures
from .generators import gen_chain, gen_grid, gen_mcc, gen_mtc, gen_outerplanar, gen_star
from .graph import (
    DualGraph,
    Edge,
    EmbeddingError,
    Face,
    GraphError,
    PlanarGraph,
    build_dual,
    components_after_removal,
    faces,
    make_biconnected,
    normalize,
)
from .instance_io import ParseError, ValidationError, parse_instance, serialize_instance
from .instances import MCCInstance, MinMCInstance, MTCInstance
from .multicut import (
    BudgetExceeded,
    SolverOptions,
    SolveStats,
    restrict_clusters,
    solve,
    solve_mcc,
    solve_mcc_exact,
    solve_minmc,
    solve_partial_minmc,
    verify,
)
from .mtc import CutSolution, build_cluster_gadget, solve_mtc_outer
from .oracle import brute_force, check_structure, max_cluster_optimum
from .pipeline import solve_raw

__all__ = [
    "BudgetExceeded", "Clustering", "CutSolution", "DualGraph", "Edge", "EmbeddingError", "Face",
    "GraphError", "MCCInstance", "MTCInstance", "MinMCInstance", "ParseError", "PlanarGraph",
    "SolveStats", "SolverOptions", "StructureChoice", "ValidationError", "brute_force", "build_cluster_gadget",
    "build_dual", "check_noncrossing", "check_structure", "components_after_removal", "enumerate_clusterings",
    "enumerate_structures", "faces", "gen_chain", "gen_grid", "gen_mcc", "gen_mtc", "gen_outerplanar", "gen_star", "make_biconnected", "max_cluster_optimum", "normalize", "parse_instance",
    "restrict_clusters", "serialize_instance", "solve", "solve_mcc", "solve_mcc_exact", "solve_minmc",
    "solve_mtc_outer", "solve_partial_minmc", "solve_raw", "verify",
]
