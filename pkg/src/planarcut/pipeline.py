"""End-to-end solving of raw instances: normalize, solve per component, map back."""

from __future__ import annotations

import dataclasses

from .graph import GraphError, normalize
from .instances import Instance, MCCInstance, MinMCInstance
from .multicut import SolverOptions, SolveStats, Verification, solve, verify
from .mtc import CutSolution, MTCInstance


@dataclasses.dataclass(frozen=True)
class PipelineResult:
    solution: CutSolution  # on the raw graph, raw edge ids
    verification: Verification


def _component_instance(instance: Instance, graph, local: dict[int, int]) -> Instance | None:
    if isinstance(instance, MinMCInstance):
        pairs = tuple((local[s], local[t]) for s, t in instance.pairs if s in local and t in local)
        return MinMCInstance(graph, pairs) if pairs else None
    if isinstance(instance, MCCInstance):
        clusters = tuple(tuple(local[v] for v in c if v in local) for c in instance.clusters)
        clusters = tuple(c for c in clusters if c)
        return MCCInstance(graph, clusters) if len(clusters) >= 2 else None
    terms = tuple(local[t] for t in instance.terminals if t in local)
    return MTCInstance(graph, terms) if len(terms) >= 2 else None


def solve_raw(instance: Instance, options: SolverOptions | None = None,
              stats: SolveStats | None = None) -> PipelineResult:
    """Solve an instance whose graph may have loops, parallel edges or several components.

    Pairs or clusters spread over different components are already
    separated and need no edges.  Raises :class:`GraphError` when a terminal
    is not on the outer face of its own component.
    """
    stats = stats if stats is not None else SolveStats()
    raw_cut: list[int] = []
    for part in normalize(instance.graph):
        local = {v: i for i, v in enumerate(part.vertex_origin)}
        sub = _component_instance(instance, part.graph, local)
        if sub is None:
            continue
        part_stats = SolveStats()
        sol = solve(sub, options, part_stats)
        stats.merge(part_stats)
        stats.wall_time += part_stats.wall_time
        raw_cut += part.raw_cut(sol.cut_edges)
    solution = CutSolution.from_cut(instance.graph, raw_cut)
    check = verify(instance, solution.cut_edges)
    if not check.feasible:
        raise GraphError("internal: translated solution is infeasible: " + "; ".join(check.violations))
    return PipelineResult(solution, check)
