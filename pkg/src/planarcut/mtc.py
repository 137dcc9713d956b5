"""Minimum multiterminal cut with every terminal on the outer face.

The outer dual vertex is split into one *gap vertex* per boundary arc between
cyclically consecutive terminals.  A set of primal edges separates all
terminals exactly when its dual edges contain a connected subgraph touching
every gap, so the optimum is a minimum Steiner tree on the gap vertices.
Because the gaps all lie on one face of the split dual, the Dreyfus-Wagner
recursion only ever needs intervals of consecutive gaps, which gives an
``O(p^3 n + p^2 n log n)`` dynamic program for ``p`` terminals.
"""

from __future__ import annotations

import dataclasses
import bisect
import heapq
from typing import Iterable, Sequence

from .graph import (
    ComponentPartition,
    DualGraph,
    Edge,
    GraphError,
    PlanarGraph,
    biconnected_view,
    build_dual,
    components_after_removal,
)


class InfeasibleStructure(Exception):
    """A structure guess whose clusters cannot be attached without crossings."""


@dataclasses.dataclass(frozen=True)
class CutSolution:
    cut_edges: frozenset[int]
    total_weight: int
    components: ComponentPartition

    @classmethod
    def from_cut(cls, graph: PlanarGraph, cut: Iterable[int]) -> "CutSolution":
        cut = frozenset(cut)
        return cls(cut, sum(graph.edge[e].w for e in cut), components_after_removal(graph, cut))

    @property
    def sorted_edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.cut_edges))

    def key(self) -> tuple[int, tuple[int, ...]]:
        """Total order used for tie-breaking: weight, then sorted edge ids."""
        return self.total_weight, self.sorted_edges


@dataclasses.dataclass(frozen=True)
class MTCInstance:
    graph: PlanarGraph
    terminals: tuple[int, ...]

    def __post_init__(self):
        ts = tuple(self.terminals)
        if len(set(ts)) != len(ts):
            raise GraphError("terminals must be distinct")
        for t in ts:
            if not 0 <= t < self.graph.vertex_count:
                raise GraphError(f"terminal {t} is not a vertex")
            if self.graph.edges and not self.graph.on_outer_face(t):
                raise GraphError(f"terminal {t} does not lie on the outer face "
                                 "(every terminal must be a vertex of the outer face walk)")
        pos = self.graph.boundary_position
        object.__setattr__(self, "terminals", tuple(sorted(ts, key=lambda t: pos.get(t, t))))

    def separation_pairs(self) -> list[tuple[int, int]]:
        ts = self.terminals
        return [(a, b) for i, a in enumerate(ts) for b in ts[i + 1:]]


@dataclasses.dataclass(frozen=True)
class GapGraph:
    """Dual with the outer vertex split into gap vertices ``0..gap_count-1``.

    Inner faces become vertices ``gap_count..``; ``face_vertex`` maps a face id
    of the primal graph to its split-dual vertex (absent for the outer face).
    """

    gap_count: int
    vertex_count: int
    endpoints: dict[int, tuple[int, int]]
    weight: dict[int, int]
    face_vertex: dict[int, int]
    base: DualGraph

    def adjacency(self) -> list[list[tuple[int, int, int]]]:
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid in sorted(self.endpoints):
            a, b = self.endpoints[eid]
            w = self.weight[eid]
            adj[a].append((b, w, eid))
            adj[b].append((a, w, eid))
        return adj

    def merge(self) -> DualGraph:
        """Collapse the gaps back into a single outer vertex."""
        back = {v: f for f, v in self.face_vertex.items()}
        merged = {}
        for eid, (a, b) in self.endpoints.items():
            merged[eid] = (back.get(a, self.base.outer_vertex), back.get(b, self.base.outer_vertex))
        return DualGraph(self.base.vertex_count, self.base.outer_vertex, merged, dict(self.weight))


def split_outer_dual(graph: PlanarGraph, terminals: Sequence[int], dual: DualGraph | None = None) -> GapGraph:
    """Split the outer dual vertex; gap ``i`` covers the arc from terminal ``i`` to ``i+1``.

    ``graph`` must be 2-vertex-connected and ``terminals`` in boundary order.
    """
    dual = build_dual(graph) if dual is None else dual
    walk = graph.outer_walk
    where = {d[1]: i for i, d in enumerate(walk)}
    for t in terminals:
        if t not in where:
            raise GraphError(f"terminal {t} does not lie on the outer face "
                             "(every terminal must be a vertex of the outer face walk)")
    pos = [where[t] for t in terminals]
    if pos != sorted(pos):
        raise GraphError("terminals are not in boundary order")
    p = len(pos)
    # dart i lies on the arc of the last terminal at or before it, wrapping to p-1
    gap_of_dart = {d: (bisect.bisect_right(pos, i) - 1) % p for i, d in enumerate(walk)}
    outer = dual.outer_vertex
    face_vertex = {}
    for f in range(dual.vertex_count):
        if f != outer:
            face_vertex[f] = p + len(face_vertex)
    endpoints = {}
    for e in graph.edges:
        ends = []
        for dart in ((e.id, e.u), (e.id, e.v)):
            f = graph.face_of_dart[dart]
            ends.append(gap_of_dart[dart] if f == outer else face_vertex[f])
        if ends[0] == ends[1]:
            raise GraphError(f"edge {e.id} borders a single face; graph is not 2-connected")
        endpoints[e.id] = (ends[0], ends[1])
    return GapGraph(p, p + len(face_vertex), endpoints, dict(dual.weight), face_vertex, dual)


def _dijkstra(adj, init: dict[int, int] | list, n: int):
    """Multi-source Dijkstra from initial labels; returns (dist, pred edge, pred vertex)."""
    inf = None
    dist: list[int | None] = [inf] * n
    pred_e = [-1] * n
    pred_v = [-1] * n
    heap = []
    items = init.items() if isinstance(init, dict) else enumerate(init)
    for v, d in items:
        if d is not None:
            dist[v] = d
            heap.append((d, v))
    heapq.heapify(heap)
    done = [False] * n
    while heap:
        d, u = heapq.heappop(heap)
        if done[u] or d != dist[u]:
            continue
        done[u] = True
        for v, w, eid in adj[u]:
            nd = d + w
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                pred_e[v] = eid
                pred_v[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, pred_e, pred_v


@dataclasses.dataclass(frozen=True)
class GapDistances:
    dist: list[list[int]]
    paths: dict[tuple[int, int], tuple[int, ...]]  # dual edge ids, gap i -> gap j


def gap_distances(gap_graph: GapGraph) -> GapDistances:
    adj = gap_graph.adjacency()
    n = gap_graph.vertex_count
    p = gap_graph.gap_count
    dist = [[0] * p for _ in range(p)]
    paths = {}
    for i in range(p):
        d, pe, pv = _dijkstra(adj, {i: 0}, n)
        for j in range(p):
            dist[i][j] = d[j]
            path = []
            v = j
            while v != i:
                path.append(pe[v])
                v = pv[v]
            paths[(i, j)] = tuple(reversed(path))
    return GapDistances(dist, paths)


def steiner_gap_tree(gap_graph: GapGraph) -> tuple[int, frozenset[int]]:
    """Minimum Steiner tree spanning all gap vertices (interval DP rooted at gap 0)."""
    p = gap_graph.gap_count
    if p <= 1:
        return 0, frozenset()
    adj = gap_graph.adjacency()
    n = gap_graph.vertex_count
    # table[(a, b)] holds labels for the gap interval a..b (1 <= a <= b < p)
    label: dict[tuple[int, int], list] = {}
    pred_e: dict[tuple[int, int], list] = {}
    pred_v: dict[tuple[int, int], list] = {}
    split: dict[tuple[int, int], list] = {}
    for a in range(1, p):
        d, pe, pv = _dijkstra(adj, {a: 0}, n)
        label[(a, a)], pred_e[(a, a)], pred_v[(a, a)] = d, pe, pv
        split[(a, a)] = None
    for length in range(2, p):
        for a in range(1, p - length + 1):
            b = a + length - 1
            base: list = [None] * n
            how = [-1] * n
            for m in range(a, b):
                left, right = label[(a, m)], label[(m + 1, b)]
                for v in range(n):
                    lv, rv = left[v], right[v]
                    if lv is None or rv is None:
                        continue
                    s = lv + rv
                    if base[v] is None or s < base[v]:
                        base[v] = s
                        how[v] = m
            d, pe, pv = _dijkstra(adj, base, n)
            label[(a, b)], pred_e[(a, b)], pred_v[(a, b)] = d, pe, pv
            split[(a, b)] = how
    root = (1, p - 1)
    total = label[root][0]
    used: set[int] = set()
    stack = [(root, 0)]
    while stack:
        (a, b), v = stack.pop()
        pe, pv = pred_e[(a, b)], pred_v[(a, b)]
        while pe[v] != -1:
            used.add(pe[v])
            v = pv[v]
        if a == b:
            continue
        m = split[(a, b)][v]
        stack.append(((a, m), v))
        stack.append(((m + 1, b), v))
    assert sum(gap_graph.weight[e] for e in used) <= total
    return total, frozenset(used)


@dataclasses.dataclass
class MTCStats:
    calls: int = 0


STATS = MTCStats()


def mtc_cut_biconnected(graph: PlanarGraph, terminals: Sequence[int]) -> frozenset[int]:
    """Optimal multiterminal cut edges of a 2-connected graph (terminals in boundary order)."""
    STATS.calls += 1
    if len(terminals) <= 1:
        return frozenset()
    gg = split_outer_dual(graph, terminals)
    _, tree = steiner_gap_tree(gg)
    return tree


def solve_mtc_outer(instance: MTCInstance) -> CutSolution:
    """Exact minimum multiterminal cut; works on any connected graph."""
    g = instance.graph
    if len(instance.terminals) <= 1 or not g.edges:
        return CutSolution.from_cut(g, ())
    aug = biconnected_view(g)
    lifted = [aug.lift_vertex(t) for t in instance.terminals]
    pos = aug.graph.boundary_position
    lifted.sort(key=pos.__getitem__)
    cut = mtc_cut_biconnected(aug.graph, lifted)
    return CutSolution.from_cut(g, aug.project_cut(cut))


# -- cluster gadget ------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class ClusterGadget:
    graph: PlanarGraph
    terminals: tuple[int, ...]  # MTC terminals in boundary order of ``graph``
    heavy: frozenset[int]
    heavy_weight: int


def build_cluster_gadget(graph: PlanarGraph, good_clusters: Sequence[Sequence[int]]) -> ClusterGadget:
    """Attach one cluster vertex per good cluster with at least two terminals.

    Each entry of ``good_clusters`` lists its terminals in boundary order
    starting at the cluster's first terminal.  ``graph`` must be
    2-vertex-connected.  The runs of the clusters must be consecutive among
    all listed terminals, otherwise :class:`InfeasibleStructure` is raised.
    """
    walk = graph.outer_walk
    where = {d[1]: i for i, d in enumerate(walk)}
    listed = [t for c in good_clusters for t in c]
    if len(set(listed)) != len(listed):
        raise GraphError("good clusters overlap")
    for t in listed:
        if t not in where:
            raise GraphError(f"terminal {t} does not lie on the outer face "
                             "(every terminal must be a vertex of the outer face walk)")
    owner = {t: i for i, c in enumerate(good_clusters) for t in c}
    # every cluster run, read from its first terminal, must precede any other cluster's terminal
    ordered = sorted(listed, key=where.__getitem__)
    for i, c in enumerate(good_clusters):
        start = ordered.index(c[0])
        run = [ordered[(start + j) % len(ordered)] for j in range(len(c))]
        if run != list(c) or any(owner[t] != i for t in run):
            raise InfeasibleStructure(f"cluster {i} is not a consecutive run from {c[0]}")
    heavy_w = 1 + graph.total_weight
    n = graph.vertex_count
    next_id = max(e.id for e in graph.edges) + 1
    rotation = [list(r) for r in graph.rotation]
    edges = list(graph.edges)
    heavy = []
    terminals_out = []
    outer = graph.outer
    for c in good_clusters:
        if len(c) == 1:
            terminals_out.append(c[0])
            continue
        cv = n
        n += 1
        ids = []
        for t in c:
            eid = next_id
            next_id += 1
            ids.append(eid)
            edges.append(Edge(eid, t, cv, heavy_w))
            e_out = walk[where[t]][0]
            r = rotation[t]
            r.insert(r.index(e_out), eid)  # new edge fills the outer corner before e_out
        rotation.append(list(reversed(ids)))
        heavy += ids
        terminals_out.append(cv)
    if good_clusters:
        last = good_clusters[0][-1]
        outer = (walk[where[last]][0], last)
    h = PlanarGraph(n, tuple(edges), tuple(tuple(r) for r in rotation), outer)
    h.faces  # noqa: B018 - Euler check
    pos = h.boundary_position
    for t in terminals_out:
        if t not in pos:
            raise GraphError("internal: cluster gadget left a terminal off the outer face")
    terminals_out.sort(key=pos.__getitem__)
    return ClusterGadget(h, tuple(terminals_out), frozenset(heavy), heavy_w)
