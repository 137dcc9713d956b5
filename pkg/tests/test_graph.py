import pytest

from planarcut.generators import embed_from_coordinates, gen_chain, grid_graph
from planarcut.graph import (
    EmbeddingError,
    GraphError,
    PlanarGraph,
    build_dual,
    components_after_removal,
    faces,
    make_biconnected,
    normalize,
)
from planarcut.instances import MinMCInstance
from planarcut.oracle import brute_force

from suites import path, square, triangle


def test_face_counts():
    assert len(faces(triangle())) == 2
    assert len(faces(square())) == 2
    assert len(faces(square(chord=True))) == 3
    g = grid_graph(2, 2)
    assert g.vertex_count - len(g.edges) + len(g.faces) == 2


def test_bad_rotation_fails_euler():
    # C4 with the rotation at one vertex reversed is still a valid map only on a torus-like walk
    g = square(chord=True)
    rot = list(g.rotation)
    rot[0] = tuple(reversed(rot[0]))
    bad = PlanarGraph(g.vertex_count, g.edges, tuple(rot), g.outer)
    with pytest.raises(EmbeddingError):
        faces(bad)


def test_rotation_must_list_every_edge_end():
    g = triangle()
    rot = list(g.rotation)
    rot[1] = rot[1][:1]
    with pytest.raises(GraphError, match="vertex 1"):
        PlanarGraph.build(3, g.edges, rot, g.outer)


def test_normalize_identity_on_triangle():
    (part,) = normalize(triangle((1, 2, 3)))
    assert [tuple(e) for e in part.graph.edges] == [tuple(e) for e in triangle((1, 2, 3)).edges]


def test_normalize_merges_parallel_edges():
    # u=0, v=1 joined twice (weights 2 and 3), drawn as a digon
    g = PlanarGraph.build(2, [(0, 0, 1, 2), (1, 0, 1, 3)], [(0, 1), (1, 0)], (0, 0))
    (part,) = normalize(g)
    assert len(part.graph.edges) == 1
    assert part.graph.edges[0].w == 5
    assert part.raw_cut([0]) == [0, 1]


def test_normalize_drops_loops():
    # loop at 0 (weight 7) plus edge 0-1 (weight 1)
    g = PlanarGraph.build(2, [(0, 0, 0, 7), (1, 0, 1, 1)], [(0, 0, 1), (1,)], (1, 0))
    (part,) = normalize(g)
    assert [(e.u, e.v, e.w) for e in part.graph.edges] == [(0, 1, 1)]


def test_normalize_splits_components_and_is_idempotent():
    pos = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0), (5.0, 0.0), (6.0, 0.0)]
    g = embed_from_coordinates(5, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (3, 4, 2)], pos)
    parts = normalize(g)
    assert [p.vertex_origin for p in parts] == [(0, 1, 2), (3, 4)]
    again = normalize(parts[0].graph)
    assert len(again) == 1
    assert again[0].graph.edges == parts[0].graph.edges
    assert again[0].graph.rotation == parts[0].graph.rotation


def test_negative_weight_rejected():
    with pytest.raises(GraphError):
        PlanarGraph.build(2, [(0, 0, 1, -1)], [(0,), (0,)], (0, 0))


def test_make_biconnected_on_cycle_doubles_weights():
    g = square((1, 2, 3, 4))
    aug = make_biconnected(g)
    assert aug.graph.vertex_count == 4
    assert sorted(e.w for e in aug.graph.edges) == [2, 4, 6, 8]
    assert not aug.heavy


def test_make_biconnected_on_path_uses_heavy_cycles():
    g = path(3)
    aug = make_biconnected(g)
    assert aug.graph.is_biconnected()
    assert aug.heavy
    assert all(aug.graph.edge[e].w == aug.heavy_weight for e in aug.heavy)
    assert aug.heavy_weight == 1 + sum(e.w for e in aug.graph.edges if e.id not in aug.heavy)


def test_bridge_weight_maps_back():
    g = path(2, [3])
    aug = make_biconnected(g)
    lifted = aug.lift_cut([0])
    assert sum(aug.graph.edge[e].w for e in lifted) == 6
    assert aug.project_cut(lifted) == {0}


@pytest.mark.parametrize("build", [lambda: path(3), lambda: path(4, [2, 1, 3]), lambda: gen_chain(2).graph,
                                   lambda: grid_graph(2, 2, [1, 2, 3, 4])])
def test_augmentation_doubles_multicut_optimum(build):
    g = build()
    aug = make_biconnected(g)
    ends = (0, g.vertex_count - 1)
    lifted = tuple(aug.lift_vertex(v) for v in ends)
    base = brute_force(MinMCInstance(g, (ends,)))
    big = brute_force(MinMCInstance(aug.graph, (lifted,)))
    assert big.total_weight == 2 * base.total_weight
    assert not big.cut_edges & aug.heavy


def test_dual_of_triangle_and_square():
    d = build_dual(triangle())
    assert d.vertex_count == 2 and len(d.endpoints) == 3
    d = build_dual(square())
    assert d.vertex_count == 2 and len(d.endpoints) == 4
    g = square(chord=True)
    d = build_dual(g)
    assert d.vertex_count == 3
    a, b = d.endpoints[4]
    assert d.outer_vertex not in (a, b) and a != b


def test_dual_edges_map_back_to_primal():
    g = grid_graph(3, 3)
    d = build_dual(g)
    fod = g.face_of_dart
    for e in g.edges:
        assert d.primal_of(e.id) == e.id
        assert set(d.endpoints[e.id]) == {fod[(e.id, e.u)], fod[(e.id, e.v)]}


def test_components_after_removal():
    inst = gen_chain(3)
    g = inst.graph
    assert components_after_removal(g, ()).component_count == 1
    p = components_after_removal(path(3), [0])
    assert p.members() == [[0], [1, 2]]
    assert components_after_removal(g, [0, 2, 4]).component_count == 4
    with pytest.raises(GraphError):
        components_after_removal(g, [99])
