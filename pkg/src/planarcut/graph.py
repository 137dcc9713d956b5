"""Embedded planar graphs: rotation systems, faces, duals and preprocessing.

A graph is stored as an edge list plus a rotation system: for every vertex the
clockwise cyclic list of incident edge ids.  A dart is a pair
``(edge_id, tail)``.  Faces are traced with the rule "arrive at ``v`` through
edge ``e``, leave through the rotation successor of ``e`` at ``v``"; the
boundary order used everywhere in this package is the order in which the
outer face walk visits vertices.
"""

from __future__ import annotations

import dataclasses
from collections import defaultdict
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import networkx as nx


class GraphError(ValueError):
    """Raised for graphs that violate a structural requirement."""


class EmbeddingError(GraphError):
    """Raised when a rotation system is not a planar embedding."""


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    w: int


Dart = tuple[int, int]  # (edge id, tail vertex)


@dataclasses.dataclass(frozen=True)
class Face:
    face_id: int
    boundary_walk: tuple[Dart, ...]

    @property
    def vertices(self) -> list[int]:
        return [tail for _, tail in self.boundary_walk]


@dataclasses.dataclass(frozen=True, eq=False)
class PlanarGraph:
    """Weighted graph with a combinatorial embedding and a designated outer face.

    ``outer`` is a dart lying on the outer face walk.  It may be ``None`` only
    for edgeless graphs.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    rotation: tuple[tuple[int, ...], ...]
    outer: Dart | None

    @classmethod
    def build(cls, vertex_count: int, edges: Iterable[Sequence[int]],
              rotation: Sequence[Sequence[int]], outer: Dart | None) -> "PlanarGraph":
        g = cls(int(vertex_count), tuple(Edge(*map(int, e)) for e in edges),
                tuple(tuple(int(x) for x in r) for r in rotation),
                None if outer is None else (int(outer[0]), int(outer[1])))
        g.validate()
        return g

    # -- lookups ---------------------------------------------------------

    @cached_property
    def edge(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def position(self) -> list[dict[int, int]]:
        return [{eid: i for i, eid in enumerate(rot)} for rot in self.rotation]

    @cached_property
    def total_weight(self) -> int:
        return sum(e.w for e in self.edges)

    def other(self, eid: int, v: int) -> int:
        e = self.edge[eid]
        return e.v if e.u == v else e.u

    def successor(self, v: int, eid: int) -> int:
        rot = self.rotation[v]
        return rot[(self.position[v][eid] + 1) % len(rot)]

    def next_dart(self, dart: Dart) -> Dart:
        eid, tail = dart
        head = self.other(eid, tail)
        return self.successor(head, eid), head

    def neighbors(self, v: int) -> list[int]:
        return [self.other(eid, v) for eid in self.rotation[v]]

    def validate(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise GraphError("vertex_count must be nonnegative")
        if len(self.rotation) != n:
            raise GraphError(f"rotation has {len(self.rotation)} entries, expected {n}")
        seen_ids: set[int] = set()
        for e in self.edges:
            if e.id < 0 or e.id in seen_ids:
                raise GraphError(f"edge id {e.id} is negative or duplicated")
            seen_ids.add(e.id)
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise GraphError(f"edge {e.id} has an endpoint outside 0..{n - 1}")
            if e.w < 0:
                raise GraphError(f"edge {e.id} has negative weight {e.w}")
        ends: dict[int, list[int]] = defaultdict(list)
        for e in self.edges:
            ends[e.u].append(e.id)
            ends[e.v].append(e.id)
        for v, rot in enumerate(self.rotation):
            if sorted(rot) != sorted(ends.get(v, [])):
                missing = set(ends.get(v, [])) - set(rot)
                extra = set(rot) - set(ends.get(v, []))
                raise GraphError(f"rotation of vertex {v} does not list its edge-ends "
                                 f"(missing {sorted(missing)}, unexpected {sorted(extra)})")
        if self.edges:
            if self.outer is None:
                raise GraphError("graph with edges needs an outer dart")
            eid, tail = self.outer
            if eid not in self.edge or tail not in (self.edge[eid].u, self.edge[eid].v):
                raise GraphError(f"outer dart {self.outer} is not a dart of the graph")
            if self.edge[eid].u == self.edge[eid].v:
                raise GraphError(f"outer dart {self.outer} lies on a loop; name a non-loop edge")

    # -- structure -------------------------------------------------------

    def is_simple(self) -> bool:
        seen = set()
        for e in self.edges:
            if e.u == e.v:
                return False
            key = (min(e.u, e.v), max(e.u, e.v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def nx_graph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.vertex_count))
        for e in self.edges:
            g.add_edge(e.u, e.v, key=e.id, weight=e.w)
        return g

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or components_after_removal(self, ()).component_count == 1

    def is_biconnected(self) -> bool:
        """2-vertex-connected in the sense needed here: simple outer boundary cycle."""
        if self.vertex_count < 3 or not self.is_simple():
            return False
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from((e.u, e.v) for e in self.edges)
        return nx.is_biconnected(g)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return faces(self)

    @cached_property
    def face_of_dart(self) -> dict[Dart, int]:
        return {d: f.face_id for f in self.faces for d in f.boundary_walk}

    @cached_property
    def outer_face(self) -> Face:
        if self.outer is None:
            return self.faces[0]
        return self.faces[self.face_of_dart[self.outer]]

    @cached_property
    def outer_walk(self) -> tuple[Dart, ...]:
        """Outer face walk starting at the designated outer dart."""
        walk = self.outer_face.boundary_walk
        if self.outer is None:
            return walk
        i = walk.index(self.outer)
        return walk[i:] + walk[:i]

    @cached_property
    def boundary_vertices(self) -> list[int]:
        """Distinct vertices of the outer walk in order of first visit."""
        if not self.edges:
            return list(range(self.vertex_count))
        order: list[int] = []
        seen = set()
        for _, tail in self.outer_walk:
            if tail not in seen:
                seen.add(tail)
                order.append(tail)
        return order

    @cached_property
    def boundary_position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.boundary_vertices)}

    @cached_property
    def outer_corner(self) -> dict[int, Dart]:
        """For each outer vertex, the first outer-walk dart leaving it."""
        out: dict[int, Dart] = {}
        for d in self.outer_walk:
            out.setdefault(d[1], d)
        return out

    @cached_property
    def _main_component(self) -> frozenset[int]:
        if self.outer is None:
            return frozenset(range(self.vertex_count))
        part = components_after_removal(self, ())
        c = part.component_of[self.outer[1]]
        return frozenset(v for v in range(self.vertex_count) if part.component_of[v] == c)

    def on_outer_face(self, v: int) -> bool:
        """Outer-walk vertex, isolated vertex, or vertex of a component away from the outer dart.

        Components not containing the outer dart get their own outer face
        when the graph is split by :func:`normalize`, and are checked there.
        """
        if v in self.boundary_position or not self.rotation[v]:
            return True
        return v not in self._main_component


def faces(graph: PlanarGraph, check_euler: bool = True) -> tuple[Face, ...]:
    """Trace all face walks; reject rotation systems that are not planar.

    Loops take no part: they are dropped by :func:`normalize` and a dart
    cannot tell the two ends of a loop apart.
    """
    proper = [e for e in graph.edges if e.u != e.v]
    if not proper:
        return (Face(0, ()),)
    ends = {e.id: (e.u, e.v) for e in proper}
    rotation, position = graph.rotation, graph.position
    if len(proper) != len(graph.edges):
        rotation = tuple(tuple(x for x in r if x in ends) for r in rotation)
        position = [{eid: i for i, eid in enumerate(r)} for r in rotation]
    seen: set[Dart] = set()
    out: list[Face] = []
    for e in sorted(proper):
        for start in ((e.id, e.u), (e.id, e.v)):
            if start in seen:
                continue
            walk = []
            d = start
            while d not in seen:
                seen.add(d)
                walk.append(d)
                eid, tail = d
                u, v = ends[eid]
                head = v if u == tail else u
                rot = rotation[head]
                d = (rot[(position[head][eid] + 1) % len(rot)], head)
            if d != start:
                raise EmbeddingError(f"face walk from dart {start} does not close")
            out.append(Face(len(out), tuple(walk)))
    if check_euler:
        components = components_after_removal(graph, ()).component_count
        isolated = sum(1 for r in rotation if not r)
        # V - E + F = 2 per component, where every component traces its own outer
        # walk and an isolated vertex traces none
        if graph.vertex_count - len(proper) + len(out) != 2 * components - isolated:
            raise EmbeddingError(
                f"Euler check failed: V={graph.vertex_count} E={len(proper)} F={len(out)}")
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class DualGraph:
    """Face-vertex graph.  Dual edge ids coincide with primal edge ids."""

    vertex_count: int
    outer_vertex: int
    endpoints: dict[int, tuple[int, int]]  # dual edge id -> (face of dart u->v, face of dart v->u)
    weight: dict[int, int]

    @property
    def edge_ids(self) -> list[int]:
        return sorted(self.endpoints)

    def primal_of(self, dual_edge: int) -> int:
        return dual_edge

    def adjacency(self) -> list[list[tuple[int, int, int]]]:
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid in self.edge_ids:
            a, b = self.endpoints[eid]
            w = self.weight[eid]
            adj[a].append((b, w, eid))
            if a != b:
                adj[b].append((a, w, eid))
        return adj


def build_dual(graph: PlanarGraph, face_list: Sequence[Face] | None = None) -> DualGraph:
    face_list = graph.faces if face_list is None else face_list
    face_of = {d: f.face_id for f in face_list for d in f.boundary_walk}
    endpoints = {}
    for e in graph.edges:
        endpoints[e.id] = (face_of[(e.id, e.u)], face_of[(e.id, e.v)])
    outer = face_of[graph.outer] if graph.outer is not None else 0
    return DualGraph(len(face_list), outer, endpoints, {e.id: e.w for e in graph.edges})


@dataclasses.dataclass(frozen=True)
class ComponentPartition:
    component_of: tuple[int, ...]
    component_count: int

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.component_count)]
        for v, c in enumerate(self.component_of):
            out[c].append(v)
        return out


def components_after_removal(graph: PlanarGraph, edge_set: Iterable[int]) -> ComponentPartition:
    """Components of ``graph`` minus ``edge_set``, numbered by smallest vertex."""
    removed = set(edge_set)
    unknown = removed - graph.edge.keys()
    if unknown:
        raise GraphError(f"unknown edge ids {sorted(unknown)}")
    parent = list(range(graph.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in graph.edges:
        if e.id not in removed:
            a, b = find(e.u), find(e.v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    label: dict[int, int] = {}
    comp = []
    for v in range(graph.vertex_count):
        r = find(v)
        if r not in label:
            label[r] = len(label)
        comp.append(label[r])
    return ComponentPartition(tuple(comp), len(label))


def canonical_cut(graph: PlanarGraph, edge_set: Iterable[int]) -> frozenset[int]:
    """Edges joining different components of ``graph`` minus ``edge_set``."""
    part = components_after_removal(graph, edge_set)
    c = part.component_of
    return frozenset(e.id for e in graph.edges if c[e.u] != c[e.v])


# -- normalization -----------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Normalized:
    """Result of :func:`normalize` for one connected component.

    ``vertex_origin[i]`` is the raw vertex of normalized vertex ``i`` and
    ``edge_origin[eid]`` lists the raw edge ids merged into edge ``eid``.
    """

    graph: PlanarGraph
    vertex_origin: tuple[int, ...]
    edge_origin: dict[int, tuple[int, ...]]

    def raw_cut(self, cut: Iterable[int]) -> list[int]:
        return sorted(r for eid in cut for r in self.edge_origin[eid])


def _outer_dart_after_deletion(graph: PlanarGraph, keep: set[int], candidates: Iterable[Dart]) -> Dart | None:
    """Dart of the subgraph (edges ``keep``) on the face containing an old outer corner.

    The corner of ``graph`` just before each candidate dart survives inside
    the subgraph face left through the first kept edge at or after it in the
    rotation of the tail.
    """
    for eid, t in candidates:
        rot = graph.rotation[t]
        start = graph.position[t][eid]
        for i in range(len(rot)):
            cand = rot[(start + i) % len(rot)]
            if cand in keep:
                return cand, t
    return None


def restrict(graph: PlanarGraph, keep_edges: Iterable[int]) -> PlanarGraph:
    """Subgraph on all vertices with only ``keep_edges``, outer face preserved."""
    keep = set(keep_edges)
    edges = tuple(e for e in graph.edges if e.id in keep)
    rotation = tuple(tuple(x for x in r if x in keep) for r in graph.rotation)
    outer = None
    if edges:
        outer = _outer_dart_after_deletion(graph, keep, graph.outer_walk)
        if outer is None:  # subgraph edges do not touch the outer face
            e = edges[0]
            outer = (e.id, e.u)
    return PlanarGraph(graph.vertex_count, edges, rotation, outer)


@dataclasses.dataclass(frozen=True)
class Subgraph:
    """Induced subgraph with vertices relabelled ``0..len(vertices)-1``."""

    graph: PlanarGraph
    vertices: tuple[int, ...]  # local -> parent vertex

    @cached_property
    def local(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}


def induced_subgraph(graph: PlanarGraph, vertices: Iterable[int]) -> Subgraph:
    """Induced subgraph keeping edge ids; outer face is the one containing the parent's."""
    verts = tuple(sorted(set(vertices)))
    local = {v: i for i, v in enumerate(verts)}
    keep = {e.id for e in graph.edges if e.u in local and e.v in local}
    edges = tuple(Edge(e.id, local[e.u], local[e.v], e.w) for e in graph.edges if e.id in keep)
    rotation = tuple(tuple(x for x in graph.rotation[v] if x in keep) for v in verts)
    outer = None
    if edges:
        cand = [d for d in graph.outer_walk if d[1] in local]
        found = _outer_dart_after_deletion(graph, keep, cand)
        if found is None:
            e = edges[0]
            outer = (e.id, e.u)
        else:
            outer = (found[0], local[found[1]])
    return Subgraph(PlanarGraph(len(verts), edges, rotation, outer), verts)


def normalize(raw: PlanarGraph) -> list[Normalized]:
    """Drop loops, merge parallel edges (weights add), split into components.

    Merged edges keep the smallest id among the parallel class.  Components
    are returned in order of their smallest raw vertex; each one is relabelled
    to vertices ``0..n_i-1`` preserving raw vertex order.
    """
    for e in raw.edges:
        if e.w < 0:
            raise GraphError(f"edge {e.id} has negative weight {e.w}")
    groups: dict[tuple[int, int], list[Edge]] = defaultdict(list)
    for e in sorted(raw.edges):
        if e.u != e.v:
            groups[(min(e.u, e.v), max(e.u, e.v))].append(e)
    merged: dict[int, Edge] = {}
    origin: dict[int, tuple[int, ...]] = {}
    for (a, b), es in groups.items():
        rep = es[0]
        merged[rep.id] = Edge(rep.id, rep.u, rep.v, sum(x.w for x in es))
        origin[rep.id] = tuple(x.id for x in es)
    keep = set(merged)
    rotation = tuple(tuple(x for x in r if x in keep) for r in raw.rotation)
    outer = None
    if merged:
        outer = _outer_dart_after_deletion(raw, keep, raw.outer_walk) if raw.edges else None
        if outer is None:
            outer = (min(merged), merged[min(merged)].u)
    g = PlanarGraph(raw.vertex_count, tuple(merged[i] for i in sorted(merged)), rotation, outer)
    part = components_after_removal(g, ())
    out = []
    for members in part.members():
        sub = induced_subgraph(g, members)
        sg = sub.graph
        if sg.edges and sg.outer[0] not in {d[0] for d in g.outer_walk}:
            sg = _choose_outer_for_component(sg)
        sg.faces  # noqa: B018 - validates the embedding early
        out.append(Normalized(sg, sub.vertices, {e.id: origin[e.id] for e in sg.edges}))
    return out


def _choose_outer_for_component(g: PlanarGraph) -> PlanarGraph:
    """Components away from the designated outer face get their longest face."""
    longest = max(g.faces, key=lambda f: (len(f.boundary_walk), -f.face_id))
    return PlanarGraph(g.vertex_count, g.edges, g.rotation, min(longest.boundary_walk))


# -- biconnectivity augmentation ----------------------------------------------


@dataclasses.dataclass(frozen=True)
class Augmentation:
    """Correspondence between a graph and its 2-vertex-connected augmentation.

    ``vertex_origin[b]`` is the original vertex of augmented vertex ``b``
    (``-1`` for bridge subdivision vertices).  ``heavy`` lists gadget edges.
    """

    original: PlanarGraph
    graph: PlanarGraph
    vertex_origin: tuple[int, ...]
    edge_origin: dict[int, int | None]
    heavy: frozenset[int]
    heavy_weight: int
    representative: tuple[int, ...]  # original vertex -> an augmented copy
    lift_dart: dict[Dart, Dart]
    edge_image: dict[int, tuple[int, ...]]  # original edge -> augmented edges to cut

    def lift_vertex(self, v: int) -> int:
        """Copy of ``v`` on the augmented outer face (``v`` itself when possible)."""
        if v in self.original.outer_corner:
            return self.lift_dart[self.original.outer_corner[v]][1]
        return self.representative[v]

    def lift_cut(self, cut: Iterable[int]) -> frozenset[int]:
        """Augmented edges realising an original cut at exactly twice its weight."""
        return frozenset(b for eid in cut for b in self.edge_image[eid])

    def project_cut(self, cut: Iterable[int]) -> frozenset[int]:
        """Original edges whose endpoints end up in different components."""
        part = components_after_removal(self.graph, cut)
        c = part.component_of
        rep = self.representative
        return frozenset(e.id for e in self.original.edges if c[rep[e.u]] != c[rep[e.v]])


def identity_augmentation(graph: PlanarGraph) -> Augmentation:
    n = graph.vertex_count
    return Augmentation(graph, graph, tuple(range(n)), {e.id: e.id for e in graph.edges},
                        frozenset(), 1 + graph.total_weight, tuple(range(n)),
                        {d: d for f in graph.faces for d in f.boundary_walk},
                        {e.id: (e.id,) for e in graph.edges})


def make_biconnected(graph: PlanarGraph) -> Augmentation:
    """Double all weights, subdivide bridges into 4-cycles, expand articulation vertices.

    Every bridge ``u-v`` of weight ``w`` becomes two paths ``u-x-v`` and
    ``u-y-v`` of weight ``w`` per edge, so separating ``u`` from ``v`` costs
    ``2w`` like any doubled edge.  Every remaining articulation vertex of
    degree ``d`` becomes a cycle of ``d`` copies joined by HEAVY edges, one
    copy per incident edge-end, in rotation order.
    """
    if not graph.is_connected():
        raise GraphError("make_biconnected needs a connected graph")
    if graph.vertex_count < 2:
        raise GraphError("make_biconnected needs at least two vertices")
    if not graph.is_simple():
        raise GraphError("make_biconnected needs a normalized (simple) graph")
    ng = nx.Graph()
    ng.add_nodes_from(range(graph.vertex_count))
    ng.add_edges_from((e.u, e.v) for e in graph.edges)
    bridges = {(min(a, b), max(a, b)) for a, b in nx.bridges(ng)}
    next_id = max(e.id for e in graph.edges) + 1

    # step 1: weight doubling and bridge subdivision
    n1 = graph.vertex_count
    edges1: list[Edge] = []
    origin1: dict[int, int] = {}
    vorigin1 = list(range(n1))
    rotation1 = [list(r) for r in graph.rotation]
    replaced: dict[int, tuple[int, int, int, int]] = {}  # bridge -> (ux, xv, uy, yv)
    for e in graph.edges:
        if (min(e.u, e.v), max(e.u, e.v)) not in bridges:
            edges1.append(Edge(e.id, e.u, e.v, 2 * e.w))
            origin1[e.id] = e.id
            continue
        x, y = n1, n1 + 1
        n1 += 2
        vorigin1 += [-1, -1]
        ux, xv, uy, yv = next_id, next_id + 1, next_id + 2, next_id + 3
        next_id += 4
        edges1 += [Edge(ux, e.u, x, e.w), Edge(xv, x, e.v, e.w),
                   Edge(uy, e.u, y, e.w), Edge(yv, y, e.v, e.w)]
        for b in (ux, xv, uy, yv):
            origin1[b] = e.id
        ru, rv = rotation1[e.u], rotation1[e.v]
        i = ru.index(e.id)
        ru[i:i + 1] = [ux, uy]
        i = rv.index(e.id)
        rv[i:i + 1] = [yv, xv]
        rotation1.append([ux, xv])
        rotation1.append([yv, uy])
        replaced[e.id] = (ux, xv, uy, yv)

    def lift1(d: Dart) -> Dart:
        eid, t = d
        if eid not in replaced:
            return d
        ux, xv, uy, yv = replaced[eid]
        return (ux, t) if t == graph.edge[eid].u else (yv, t)

    # step 2: articulation vertices of the bridgeless graph
    g1 = nx.Graph()
    g1.add_nodes_from(range(n1))
    g1.add_edges_from((e.u, e.v) for e in edges1)
    cut_vertices = sorted(nx.articulation_points(g1))
    end_of: dict[tuple[int, int], int] = {}  # (vertex, edge) -> new endpoint
    vorigin2 = [vorigin1[v] if vorigin1[v] >= 0 else -1 for v in range(n1)]
    n2 = n1
    rotation2: list[list[int]] = [list(r) for r in rotation1]
    heavy_edges: list[tuple[int, int, int]] = []
    for v in cut_vertices:
        rot = rotation1[v]
        d = len(rot)
        copies = [v] + list(range(n2, n2 + d - 1))
        n2 += d - 1
        vorigin2 += [vorigin1[v]] * (d - 1)
        rotation2 += [[] for _ in range(d - 1)]
        cyc = list(range(next_id, next_id + d))
        next_id += d
        for j in range(d):
            heavy_edges.append((cyc[j], copies[j], copies[(j + 1) % d]))
            end_of[(v, rot[j])] = copies[j]
            rotation2[copies[j]] = [rot[j], cyc[j], cyc[j - 1]]
    heavy_w = 1 + sum(e.w for e in edges1)
    edges2: list[Edge] = []
    for e in edges1:
        a = end_of.get((e.u, e.id), e.u)
        b = end_of.get((e.v, e.id), e.v)
        edges2.append(Edge(e.id, a, b, e.w))
    for eid, a, b in heavy_edges:
        edges2.append(Edge(eid, a, b, heavy_w))
        origin1[eid] = None

    def lift(d: Dart) -> Dart:
        eid, t = lift1(d)
        return eid, end_of.get((t, eid), t)

    outer = lift(graph.outer)
    aug = PlanarGraph(n2, tuple(sorted(edges2)), tuple(tuple(r) for r in rotation2), outer)
    rep = tuple(v for v in range(graph.vertex_count))
    lift_map = {d: lift(d) for f in graph.faces for d in f.boundary_walk}
    image = {e.id: (replaced[e.id][0], replaced[e.id][2]) if e.id in replaced else (e.id,)
             for e in graph.edges}
    result = Augmentation(graph, aug, tuple(vorigin2), origin1,
                          frozenset(eid for eid, _, _ in heavy_edges), heavy_w, rep, lift_map, image)
    aug.faces  # noqa: B018 - Euler check of the augmented embedding
    if not aug.is_biconnected():
        raise GraphError("internal: augmentation is not 2-vertex-connected")
    return result


def biconnected_view(graph: PlanarGraph) -> Augmentation:
    """``graph`` itself when already 2-connected, else :func:`make_biconnected`."""
    if graph.is_biconnected():
        return identity_augmentation(graph)
    return make_biconnected(graph)
