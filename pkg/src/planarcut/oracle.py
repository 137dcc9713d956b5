"""Exhaustive reference solvers and structural checks of optimal cuts.

The search decides edges in order of decreasing weight, either keeping or
cutting each one.  Kept edges are merged in a union-find with rollback that
tracks, per component, which terminals it holds and which terminals they
conflict with; a keep that would join two conflicting terminals is never
taken.  Only canonical cuts (every cut edge joins two different final
components) reach a leaf, so each vertex partition is visited once.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence

import networkx as nx

from .graph import (
    ComponentPartition,
    GraphError,
    PlanarGraph,
    biconnected_view,
    build_dual,
    components_after_removal,
)
from .instances import Instance, MCCInstance, MinMCInstance
from .mtc import CutSolution, MTCInstance

EDGE_CAP = 25


class OracleCapExceeded(GraphError):
    pass


def _search(graph: PlanarGraph, sep: Sequence[tuple[int, int]], prefer_components: bool) -> CutSolution:
    if len(graph.edges) > EDGE_CAP:
        raise OracleCapExceeded(f"oracle is capped at {EDGE_CAP} edges, got {len(graph.edges)}")
    n = graph.vertex_count
    terms = sorted({v for p in sep for v in p})
    tbit = {t: 1 << i for i, t in enumerate(terms)}
    conflict = [0] * n
    present = [0] * n
    for a, b in sep:
        if a == b:
            raise GraphError(f"vertex {a} must be separated from itself")
        conflict[a] |= tbit[b]
        conflict[b] |= tbit[a]
    for t in terms:
        present[t] = tbit[t]
    parent = list(range(n))
    size = [1] * n
    order = sorted(graph.edges, key=lambda e: (-e.w, e.id))
    m = len(order)

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    best: list = [None, None]  # key, cut list
    cut: list[int] = []
    components = [n]

    def leaf(weight: int) -> None:
        # reject non-canonical cuts: both ends of a cut edge in one component
        for eid in cut:
            e = graph.edge[eid]
            if find(e.u) == find(e.v):
                return
        ids = tuple(sorted(cut))
        key = (weight, -components[0], ids) if prefer_components else (weight, ids)
        if best[0] is None or key < best[0]:
            best[0], best[1] = key, ids

    def rec(i: int, weight: int) -> None:
        if best[0] is not None and weight > best[0][0]:
            return
        if i == m:
            leaf(weight)
            return
        e = order[i]
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            rec(i + 1, weight)
            return
        if not (conflict[ru] & present[rv]):
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            old_c, old_p = conflict[ru], present[ru]
            conflict[ru] |= conflict[rv]
            present[ru] |= present[rv]
            components[0] -= 1
            rec(i + 1, weight)
            components[0] += 1
            conflict[ru], present[ru] = old_c, old_p
            size[ru] -= size[rv]
            parent[rv] = rv
        cut.append(e.id)
        rec(i + 1, weight + e.w)
        cut.pop()

    rec(0, 0)
    return CutSolution.from_cut(graph, best[1])


def brute_force(instance: Instance) -> CutSolution:
    """Optimum over all edge subsets; ties broken by smallest sorted edge ids."""
    return _search(instance.graph, instance.separation_pairs(), prefer_components=False)


def brute_force_mcc(instance: MCCInstance) -> CutSolution:
    return brute_force(instance)


def max_cluster_optimum(instance: Instance) -> CutSolution:
    """An optimum inducing the largest number of components."""
    return _search(instance.graph, instance.separation_pairs(), prefer_components=True)


def brute_force_partial(instance: MinMCInstance, required: int) -> CutSolution:
    """Best multicut over all subsets of at least ``required`` pairs."""
    from itertools import combinations

    best = None
    for r in range(required, instance.k + 1):
        for subset in combinations(instance.pairs, r):
            sol = brute_force(MinMCInstance(instance.graph, subset))
            if best is None or sol.key() < best.key():
                best = sol
    return best


def max_flow_value(instance: MCCInstance) -> int:
    """Two-cluster cut value through networkx maximum flow."""
    if len(instance.clusters) != 2:
        raise ValueError("max-flow cross-check needs exactly two clusters")
    g = nx.Graph()
    for e in instance.graph.edges:
        if g.has_edge(e.u, e.v):
            g[e.u][e.v]["capacity"] += e.w
        else:
            g.add_edge(e.u, e.v, capacity=e.w)
    src, snk = "source", "sink"
    for t in instance.clusters[0]:
        g.add_edge(src, t)  # no capacity attribute: infinite
    for t in instance.clusters[1]:
        g.add_edge(snk, t)
    value, _ = nx.minimum_cut(g, src, snk)
    return int(value)


# -- structure of optimal cuts ---------------------------------------------------


@dataclasses.dataclass
class ComponentStructure:
    component: int
    vertices: list[int]
    cycles: list[list[int]]  # dual edge ids of each simple dual cycle
    cycle_vertices: list[list[int]]  # dual vertices of each cycle
    sides: list[frozenset[int]]  # primal side of each cycle containing the component
    interiors: list[frozenset[int]]  # primal side away from the unbounded region
    first_cycle: int | None = None


@dataclasses.dataclass
class StructureReport:
    graph: PlanarGraph
    outer_dual_vertex: int
    unbounded_component: int
    components: list[ComponentStructure]
    covers_boundary: bool
    through_outer: bool
    share_only_outer: bool
    nested_or_disjoint: bool
    unique_enclosing: bool
    inner_cycles: bool
    top_clusters: list[int]
    good_top_clusters: list[int]
    v_prime: dict[int, frozenset[int]]
    violations: list[str] = dataclasses.field(default_factory=list)

    @property
    def outer_cycles_ok(self) -> bool:
        return self.covers_boundary and self.through_outer and self.share_only_outer

    @property
    def nesting_ok(self) -> bool:
        return self.nested_or_disjoint and self.unique_enclosing and self.inner_cycles

    def to_dict(self) -> dict:
        return {
            "outer_dual_vertex": self.outer_dual_vertex,
            "unbounded_component": self.unbounded_component,
            "outer_cycles": {"through_outer": self.through_outer, "share_only_outer": self.share_only_outer,
                       "covers_boundary": self.covers_boundary},
            "nesting": {"nested_or_disjoint": self.nested_or_disjoint,
                       "unique_enclosing": self.unique_enclosing,
                       "inner_cycles": self.inner_cycles},
            "components": [
                {"component": c.component, "vertices": c.vertices, "cycles": c.cycles,
                 "first_cycle": c.first_cycle} for c in self.components],
            "top_clusters": self.top_clusters,
            "good_top_clusters": self.good_top_clusters,
            "v_prime": {str(k): sorted(v) for k, v in sorted(self.v_prime.items())},
            "violations": self.violations,
        }


def _decompose(edges: list[int], endpoints: dict[int, tuple[int, int]], outer: int,
               rotation: dict[int, list[int]]) -> list[list[int]]:
    """Split an even-degree dual edge set into simple cycles.

    Closed walks are peeled starting at the outer dual vertex when possible,
    always leaving a vertex through the next unused edge in its rotation;
    every repeated vertex on a walk closes off one simple cycle.
    """
    unused = set(edges)
    cycles: list[list[int]] = []

    def nxt(v: int, came: int | None) -> int | None:
        rot = [e for e in rotation[v] if e in unused]
        if not rot:
            return None
        if came is None or came not in rotation[v]:
            return rot[0]
        full = rotation[v]
        i = full.index(came)
        for j in range(1, len(full) + 1):
            e = full[(i + j) % len(full)]
            if e in unused:
                return e
        return None

    while unused:
        start = outer if any(outer in endpoints[e] for e in unused) else endpoints[min(unused)][0]
        path_v = [start]
        path_e: list[int] = []
        v, came = start, None
        while True:
            e = nxt(v, came)
            if e is None:
                break
            unused.discard(e)
            a, b = endpoints[e]
            w = b if a == v else a
            path_e.append(e)
            if w in path_v:
                i = path_v.index(w)
                cycles.append(path_e[i:])
                del path_e[i:]
                del path_v[i + 1:]
            else:
                path_v.append(w)
            v, came = w, e
    return cycles


def check_structure(instance: Instance, solution: CutSolution | Iterable[int]) -> StructureReport:
    """Dual-cycle structure of a cut's component boundaries.

    Works on the 2-connected augmentation of the instance graph when the
    graph is not 2-connected.  The unbounded region is taken to be the
    region of the outer face at the tail of the designated outer dart.
    """
    cut = solution.cut_edges if isinstance(solution, CutSolution) else frozenset(solution)
    aug = biconnected_view(instance.graph)
    g = aug.graph
    bcut = aug.lift_cut(cut)
    part = components_after_removal(g, bcut)
    comp = part.component_of
    dual = build_dual(g)
    outer = dual.outer_vertex
    rotation = {f.face_id: [d[0] for d in f.boundary_walk] for f in g.faces}
    unbounded = comp[g.outer[1]]
    violations: list[str] = []
    comps: list[ComponentStructure] = []
    boundary_edges = 0
    through_outer = share_only = True
    for c, members in enumerate(part.members()):
        bnd = sorted(e.id for e in g.edges if (comp[e.u] == c) != (comp[e.v] == c))
        cycles = _decompose(bnd, dual.endpoints, outer, rotation)
        if sorted(x for cy in cycles for x in cy) != bnd:
            violations.append(f"component {c}: decomposition does not cover its boundary")
        boundary_edges += len(bnd)
        cverts = [sorted({x for e in cy for x in dual.endpoints[e]}) for cy in cycles]
        for j, vs in enumerate(cverts):
            if outer not in vs:
                through_outer = False
                violations.append(f"component {c}: dual cycle {j} avoids the outer dual vertex")
        for j1 in range(len(cverts)):
            for j2 in range(j1 + 1, len(cverts)):
                common = set(cverts[j1]) & set(cverts[j2])
                if common - {outer}:
                    share_only = False
                    violations.append(f"component {c}: dual cycles {j1} and {j2} share {sorted(common - {outer})}")
        sides, interiors = [], []
        anchor = members[0]
        for cy in cycles:
            sp = components_after_removal(g, cy)
            side = frozenset(v for v in range(g.vertex_count) if sp.component_of[v] == sp.component_of[anchor])
            sides.append(side)
            ref = sp.component_of[g.outer[1]]
            interiors.append(frozenset(v for v in range(g.vertex_count) if sp.component_of[v] != ref))
        comps.append(ComponentStructure(c, members, cycles, cverts, sides, interiors))
    covers = not any("cover" in v for v in violations)

    nested = unique = inner = True
    for cs in comps:
        ints = cs.interiors
        for j1 in range(len(ints)):
            for j2 in range(j1 + 1, len(ints)):
                a, b = ints[j1], ints[j2]
                if a & b and not (a <= b or b <= a):
                    nested = False
                    violations.append(f"component {cs.component}: interiors {j1},{j2} overlap improperly")
        if cs.component == unbounded:
            continue
        vs = set(cs.vertices)
        enclosing = [j for j, it in enumerate(ints) if vs <= it]
        clear = [j for j in enclosing if all(not (vs & ints[o]) for o in range(len(ints)) if o != j)]
        if len(clear) != 1:
            unique = False
            violations.append(f"component {cs.component}: no unique enclosing dual cycle")
            continue
        cs.first_cycle = clear[0]
        others = [j for j in range(len(ints)) if j != cs.first_cycle]
        for j in others:
            if not ints[j] <= ints[cs.first_cycle]:
                inner = False
                violations.append(f"component {cs.component}: cycle {j} is not inside the enclosing cycle")
        for x in others:
            for y in others:
                if x < y and ints[x] & ints[y]:
                    inner = False
                    violations.append(f"component {cs.component}: inner cycles {x},{y} overlap")

    v_prime = {cs.component: cs.interiors[cs.first_cycle] for cs in comps if cs.first_cycle is not None}
    top = [c for c in sorted(v_prime) if not any(o != c and v_prime[c] <= v_prime[o] and v_prime[c] != v_prime[o]
                                                   for o in v_prime)]
    good: list[int] = []
    if top:
        good = [top[0]]
        changed = True
        while changed:
            changed = False
            for c in top:
                if c in good:
                    continue
                mine = set(comps[c].cycles[comps[c].first_cycle])
                if any(mine & set(comps[o].cycles[comps[o].first_cycle]) for o in good):
                    good.append(c)
                    changed = True
        good = sorted(good + [unbounded])
    top_all = sorted(top + [unbounded]) if comps else []
    return StructureReport(g, outer, unbounded, comps, covers, through_outer, share_only,
                           nested, unique, inner, top_all, good, v_prime, violations)


def lift_instance_terminals(instance: Instance) -> dict[int, int]:
    aug = biconnected_view(instance.graph)
    return {t: aug.lift_vertex(t) for t in instance.terminals}
