"""Divide-and-conquer exact solver for multicut with all terminals on the outer face.

:func:`solve_minmc` guesses the clustering of the terminals induced by an
optimal cut, and :func:`solve_mcc` solves the resulting multi-cluster cut
problem recursively: guess which clusters are good top clusters (and their
first terminals), attach a heavy cluster vertex to each, solve the
multiterminal cut on the cluster vertices, remove those edges and recurse
into every piece that still holds terminals of two clusters.

Every recursive call works on an induced subgraph of the host graph, so a
subproblem is identified by its vertex set and its clusters.
"""

from __future__ import annotations

import dataclasses
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .clustering import (
    Clustering,
    enumerate_clusterings,
    enumerate_noncrossing_clusterings,
    enumerate_noncrossing_refinements,
    enumerate_refinements,
    enumerate_structures,
)
from .graph import (
    Augmentation,
    Edge,
    GraphError,
    PlanarGraph,
    Subgraph,
    biconnected_view,
    components_after_removal,
    induced_subgraph,
)
from .instances import Instance, MCCInstance, MinMCInstance
from .mtc import STATS as MTC_STATS
from .mtc import CutSolution, MTCInstance, build_cluster_gadget, mtc_cut_biconnected

Clusters = tuple[tuple[int, ...], ...]
Result = tuple[int, tuple[int, ...]]  # (weight, sorted cut edge ids)


class BudgetExceeded(RuntimeError):
    pass


@dataclasses.dataclass
class SolveStats:
    clusterings: int = 0
    clusterings_bounded: int = 0
    structures: int = 0
    a2_calls: int = 0
    mtc_calls: int = 0
    memo_hits: int = 0
    heavy_edges_cut: int = 0
    max_depth: int = 0
    mtc_solves_on_best_chain: int = 0
    wall_time: float = 0.0

    def merge(self, other: "SolveStats") -> None:
        for f in dataclasses.fields(self):
            if f.name in ("max_depth", "mtc_solves_on_best_chain"):
                setattr(self, f.name, max(getattr(self, f.name), getattr(other, f.name)))
            elif f.name != "wall_time":
                setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class SolverOptions:
    noncrossing_prune: bool = True
    memoize: bool = False
    budget: int | None = None
    workers: int = 1


@dataclasses.dataclass
class _Workspace:
    sub: Subgraph
    aug: Augmentation | None
    prefix: tuple[int, ...]  # prefix sums of the sorted edge weights of the subgraph
    isolation: _IsolationBound | None = None


def restrict_clusters(clusters: Sequence[Sequence[int]], component: Iterable[int]) -> Clusters:
    """Clusters intersected with ``component``; empty intersections are dropped."""
    comp = set(component)
    out = []
    for c in clusters:
        kept = tuple(v for v in c if v in comp)
        if kept:
            out.append(kept)
    return tuple(out)


class _IsolationBound:
    """Lower bound for separating clusters: half the sum of their isolating cuts.

    In any cut separating the clusters, the edges leaving the components of
    cluster ``T`` separate ``T`` from all other terminals, and every cut edge
    leaves at most two such component groups.  Isolating cut values are
    cached per (block, terminal set).
    """

    def __init__(self, graph: PlanarGraph):
        self.net = nx.Graph()
        self.net.add_nodes_from(range(graph.vertex_count))
        for e in graph.edges:
            self.net.add_edge(e.u, e.v, capacity=e.w)
        self.cache: dict[tuple[frozenset[int], frozenset[int]], int] = {}

    def isolating_cut(self, block: frozenset[int], terminals: frozenset[int]) -> int:
        val = self.cache.get((block, terminals))
        if val is None:
            for v in block:
                self.net.add_edge("source", v)
            for v in terminals - block:
                self.net.add_edge(v, "sink")
            val = nx.minimum_cut_value(self.net, "source", "sink", flow_func=edmonds_karp)
            self.net.remove_nodes_from(["source", "sink"])
            self.cache[(block, terminals)] = val
        return val

    def __call__(self, clusters: Sequence[Sequence[int]]) -> int:
        terminals = frozenset(t for c in clusters for t in c)
        return (sum(self.isolating_cut(frozenset(c), terminals) for c in clusters) + 1) // 2


# isolating-cut bounds inside the recursion are skipped on larger pieces,
# where max-flow calls cost more than the branches they could save
ISOLATION_LIMIT = 500


class _Solver:
    """Recursive multi-cluster cut over induced subgraphs of one host graph."""

    def __init__(self, graph: PlanarGraph, options: SolverOptions, stats: SolveStats):
        if not graph.is_simple():
            raise GraphError("solver needs a normalized graph (no loops or parallel edges)")
        if not graph.is_connected():
            raise GraphError("solver needs a connected graph")
        self.graph = graph
        self.options = options
        self.stats = stats
        self._spaces: dict[frozenset[int], _Workspace] = {}
        self._memo: dict[tuple[frozenset[int], Clusters], tuple[bool, object, int]] = {}

    def workspace(self, vertices: frozenset[int]) -> _Workspace:
        ws = self._spaces.get(vertices)
        if ws is None:
            if len(vertices) == self.graph.vertex_count:
                sub = Subgraph(self.graph, tuple(range(self.graph.vertex_count)))
            else:
                sub = induced_subgraph(self.graph, vertices)
            aug = biconnected_view(sub.graph) if sub.graph.vertex_count >= 2 else None
            prefix = (0, *itertools.accumulate(sorted(e.w for e in sub.graph.edges)))
            ws = self._spaces[vertices] = _Workspace(sub, aug, prefix)
        return ws

    def lower_bound(self, vertices: frozenset[int], clusters: Clusters) -> int:
        """Cheap bound first (``c`` parts need ``c - 1`` edges), then isolating cuts."""
        ws = self.workspace(vertices)
        lb = ws.prefix[min(len(clusters) - 1, len(ws.prefix) - 1)]
        if len(vertices) <= ISOLATION_LIMIT or len(vertices) == self.graph.vertex_count:
            if ws.isolation is None:
                ws.isolation = _IsolationBound(ws.sub.graph)
            local = ws.sub.local
            lb = max(lb, ws.isolation(tuple(tuple(local[t] for t in c) for c in clusters)))
        return lb

    def lifted_order(self, vertices: frozenset[int], terminals: Iterable[int]) -> tuple[dict[int, int], list[int]]:
        """Augmented copy of each terminal and the terminals sorted along the boundary."""
        ws = self.workspace(vertices)
        lift = {t: ws.aug.lift_vertex(ws.sub.local[t]) for t in terminals}
        pos = ws.aug.graph.boundary_position
        return lift, sorted(lift, key=lambda t: pos[lift[t]])

    def weight(self, cut: Iterable[int]) -> int:
        return sum(self.graph.edge[e].w for e in cut)

    def solve(self, vertices: frozenset[int], clusters: Clusters, bound: int | None = None,
              depth: int = 0) -> tuple[Result | None, int]:
        """Best (weight, ids) not above ``bound``, plus MTC solves along its chain."""
        if len(clusters) <= 1:
            return (0, ()), 0
        key = (vertices, tuple(sorted(tuple(sorted(c)) for c in clusters)))
        if self.options.memoize and key in self._memo:
            exact, value, chain = self._memo[key]
            if exact:
                self.stats.memo_hits += 1
                if value is not None and bound is not None and value[0] > bound:
                    return None, 0
                return value, chain
            if bound is not None and bound <= value:
                self.stats.memo_hits += 1
                return None, 0
        ws = self.workspace(vertices)
        if bound is not None and self.lower_bound(vertices, clusters) > bound:
            return None, 0
        self.stats.a2_calls += 1
        self.stats.max_depth = max(self.stats.max_depth, depth + 1)
        aug = ws.aug
        lift, order = self.lifted_order(vertices, [t for c in clusters for t in c])
        lifted = Clustering(tuple(tuple(lift[t] for t in c) for c in clusters))
        border = [lift[t] for t in order]
        best: Result | None = None
        best_chain = 0
        for choice in enumerate_structures(lifted, border):
            self.stats.structures += 1
            if self.options.budget is not None and self.stats.structures > self.options.budget:
                raise BudgetExceeded(f"enumeration budget of {self.options.budget} branches exceeded")
            gadget = build_cluster_gadget(aug.graph, choice.runs)
            before = MTC_STATS.calls
            bcut = mtc_cut_biconnected(gadget.graph, gadget.terminals)
            self.stats.mtc_calls += MTC_STATS.calls - before
            if bcut & (gadget.heavy | aug.heavy):
                self.stats.heavy_edges_cut += 1
            cut = aug.project_cut(bcut)
            total = self.weight(cut)
            limit = bound if best is None else (best[0] if bound is None else min(bound, best[0]))
            if limit is not None and total > limit:
                continue
            part = components_after_removal(ws.sub.graph, cut)
            subproblems = []
            for members in part.members():
                comp = frozenset(ws.sub.vertices[i] for i in members)
                sub_clusters = restrict_clusters(clusters, comp)
                if len(sub_clusters) >= 2:
                    subproblems.append((comp, sub_clusters, self.lower_bound(comp, sub_clusters)))
            rest = sum(lb for _, _, lb in subproblems)
            if limit is not None and total + rest > limit:
                continue
            edges = set(cut)
            chain = 1
            feasible = True
            for comp, sub_clusters, lb in subproblems:
                rest -= lb
                sub_bound = None if limit is None else limit - total - rest
                res, sub_chain = self.solve(comp, sub_clusters, sub_bound, depth + 1)
                if res is None:
                    feasible = False
                    break
                total += res[0]
                edges.update(res[1])
                chain += sub_chain
                if limit is not None and total > limit:
                    feasible = False
                    break
            if not feasible:
                continue
            cand = (total, tuple(sorted(edges)))
            if best is None or cand < best:
                best, best_chain = cand, chain
        if self.options.memoize:
            # a result within the bound is the true optimum; otherwise only
            # "heavier than bound" is known
            if best is not None or bound is None:
                self._memo[key] = (True, best, best_chain)
            elif key not in self._memo or self._memo[key][1] < bound:
                self._memo[key] = (False, bound, 0)
        return best, best_chain


def _reweighted(graph: PlanarGraph) -> PlanarGraph:
    """Strictly positive weights with the same optimal cuts (ties prefer fewer edges)."""
    m = len(graph.edges)
    edges = tuple(Edge(e.id, e.u, e.v, e.w * (m + 1) + 1) for e in graph.edges)
    return PlanarGraph(graph.vertex_count, edges, graph.rotation, graph.outer)


def _host(graph: PlanarGraph) -> PlanarGraph:
    return _reweighted(graph) if any(e.w == 0 for e in graph.edges) else graph


def _finish(graph: PlanarGraph, result: Result | None) -> CutSolution | None:
    if result is None:
        return None
    return CutSolution.from_cut(graph, result[1])


def separating_upper_bound(graph: PlanarGraph, groups: Sequence[tuple[Sequence[int], Sequence[int]]]) -> int:
    """Weight of the union of minimum cuts between each ``(A, B)`` group; always feasible."""
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    for e in graph.edges:
        g.add_edge(e.u, e.v, capacity=e.w)
    cut: set[int] = set()
    for a, b in groups:
        for v in a:
            g.add_edge("source", v)  # no capacity attribute: unbounded
        for v in b:
            g.add_edge(v, "sink")
        _, (side, _) = nx.minimum_cut(g, "source", "sink", flow_func=edmonds_karp)
        g.remove_nodes_from(["source", "sink"])
        cut.update(e.id for e in graph.edges if (e.u in side) != (e.v in side))
    return sum(graph.edge[e].w for e in cut)


def _run_clusterings(solver: _Solver, clusterings: Iterable[Clustering], bound: int | None) -> Result | None:
    """Best result of the recursive solver over ``clusterings``, none heavier than ``bound``."""
    stats = solver.stats
    everything = frozenset(range(solver.graph.vertex_count))
    best: Result | None = None
    for cl in clusterings:
        stats.clusterings += 1
        limit = bound if best is None else best[0]
        if limit is not None and solver.lower_bound(everything, cl.blocks) > limit:
            stats.clusterings_bounded += 1
            continue
        res, chain = solver.solve(everything, cl.blocks, limit)
        if res is not None and (best is None or res < best):
            best = res
            stats.mtc_solves_on_best_chain = chain
    return best


def _worker(args) -> tuple[Result | None, SolveStats]:
    host, clusterings, options, bound = args
    stats = SolveStats()
    return _run_clusterings(_Solver(host, options, stats), clusterings, bound), stats


def _solve_over(host: PlanarGraph, terminals: Sequence[int], pairs: Sequence[tuple[int, int]] | None,
                clusters: Sequence[Sequence[int]] | None, options: SolverOptions,
                stats: SolveStats) -> Result | None:
    """Minimum over the candidate clusterings of the pairs, or over refinements of the clusters."""
    solver = _Solver(host, options, stats)
    order = solver.lifted_order(frozenset(range(host.vertex_count)), terminals)[1]
    if pairs is not None:
        groups = [((s,), (t,)) for s, t in pairs]
        stream = (enumerate_noncrossing_clusterings(pairs, order) if options.noncrossing_prune
                  else enumerate_clusterings(pairs))
    else:
        groups = [(c, [t for d in clusters if d is not c for t in d]) for c in clusters]
        stream = (enumerate_noncrossing_refinements(clusters, order) if options.noncrossing_prune
                  else enumerate_refinements(clusters))
    bound = separating_upper_bound(host, groups)
    if options.workers <= 1:
        return _run_clusterings(solver, stream, bound)
    clusterings = list(stream)
    w = max(1, min(options.workers, len(clusterings)))
    chunks = [clusterings[i::w] for i in range(w)]
    # a budget applies per process; results are combined by the same total order
    with ProcessPoolExecutor(max_workers=w) as pool:
        outs = list(pool.map(_worker, [(host, ch, options, bound) for ch in chunks]))
    best = None
    for res, st in outs:
        stats.merge(st)
        if res is not None and (best is None or res < best):
            best = res
    return best


def solve_minmc(instance: MinMCInstance, options: SolverOptions | None = None,
                stats: SolveStats | None = None) -> CutSolution:
    """Exact minimum multicut (all sources and sinks on the outer face)."""
    options = options or SolverOptions()
    stats = stats if stats is not None else SolveStats()
    t0 = time.perf_counter()
    g = instance.graph
    if instance.k == 0 or not g.edges:
        stats.wall_time = time.perf_counter() - t0
        return CutSolution.from_cut(g, ())
    best = _solve_over(_host(g), instance.terminals, instance.pairs, None, options, stats)
    stats.wall_time = time.perf_counter() - t0
    if best is None:
        raise RuntimeError("internal: no clustering produced a feasible multicut")
    return _finish(g, best)


def solve_mcc(instance: MCCInstance, options: SolverOptions | None = None,
              stats: SolveStats | None = None) -> CutSolution | None:
    """Recursive multi-cluster cut for the given clusters; ``None`` when no guess is feasible.

    The result is optimal when the clusters are exactly the terminal sets of
    the components of some optimal cut inducing the most components; use
    :func:`solve_mcc_exact` for arbitrary clusters.
    """
    options = options or SolverOptions()
    stats = stats if stats is not None else SolveStats()
    t0 = time.perf_counter()
    g = instance.graph
    if len(instance.clusters) <= 1 or not g.edges:
        return CutSolution.from_cut(g, ())
    solver = _Solver(_host(g), options, stats)
    res, _ = solver.solve(frozenset(range(g.vertex_count)), instance.clusters)
    stats.wall_time = time.perf_counter() - t0
    return _finish(g, res)


def solve_mcc_exact(instance: MCCInstance, options: SolverOptions | None = None,
                    stats: SolveStats | None = None) -> CutSolution:
    """Exact multi-cluster cut: :func:`solve_mcc` over every refinement of the clusters."""
    options = options or SolverOptions()
    stats = stats if stats is not None else SolveStats()
    t0 = time.perf_counter()
    g = instance.graph
    if len(instance.clusters) <= 1 or not g.edges:
        return CutSolution.from_cut(g, ())
    best = _solve_over(_host(g), instance.terminals, None, instance.clusters, options, stats)
    stats.wall_time = time.perf_counter() - t0
    if best is None:
        raise RuntimeError("internal: no refinement produced a feasible cut")
    return _finish(g, best)


def solve_partial_minmc(instance: MinMCInstance, required_count: int,
                        options: SolverOptions | None = None, stats: SolveStats | None = None) -> CutSolution:
    """Cheapest cut separating at least ``required_count`` pairs (best over pair subsets)."""
    k = instance.k
    if not 0 <= required_count <= k:
        raise ValueError(f"required_count must lie in 0..{k}")
    best = None
    for mask in range(1 << k):
        if bin(mask).count("1") < required_count:
            continue
        pairs = tuple(p for i, p in enumerate(instance.pairs) if mask >> i & 1)
        sol = solve_minmc(MinMCInstance(instance.graph, pairs), options, stats)
        if best is None or sol.key() < best.key():
            best = sol
    return best


def solve(instance: Instance, options: SolverOptions | None = None,
          stats: SolveStats | None = None) -> CutSolution:
    """Dispatch on the instance kind."""
    if isinstance(instance, MinMCInstance):
        return solve_minmc(instance, options, stats)
    if isinstance(instance, MCCInstance):
        return solve_mcc_exact(instance, options, stats)
    if isinstance(instance, MTCInstance):
        from .mtc import solve_mtc_outer

        return solve_mtc_outer(instance)
    raise TypeError(f"unsupported instance {type(instance).__name__}")


@dataclasses.dataclass(frozen=True)
class Verification:
    feasible: bool
    violations: tuple[str, ...]


def verify(instance: Instance, cut_edges: Iterable[int]) -> Verification:
    """Check that removing ``cut_edges`` separates everything the instance requires."""
    part = components_after_removal(instance.graph, cut_edges)
    c = part.component_of
    bad: list[str] = []
    if isinstance(instance, MinMCInstance):
        for i, (s, t) in enumerate(instance.pairs, start=1):
            if c[s] == c[t]:
                bad.append(f"pair {i} ({s}, {t}) is connected")
    elif isinstance(instance, MCCInstance):
        comps = [{c[v] for v in cl} for cl in instance.clusters]
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if comps[i] & comps[j]:
                    bad.append(f"clusters {i + 1} and {j + 1} are connected")
    else:
        ts = instance.terminals
        for i in range(len(ts)):
            for j in range(i + 1, len(ts)):
                if c[ts[i]] == c[ts[j]]:
                    bad.append(f"terminals {ts[i]} and {ts[j]} are connected")
    return Verification(not bad, tuple(bad))
