"""Seeded instance suites and small hand-built graphs shared by the tests."""

from __future__ import annotations

import random

from planarcut.generators import embed_from_coordinates, gen_grid, gen_mtc, gen_outerplanar, grid_graph, outerplanar_graph
from planarcut.instances import MinMCInstance, MTCInstance

GRID_SHAPES = [(2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4)]


def triangle(weights=(1, 1, 1)):
    pos = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)]
    return embed_from_coordinates(3, [(0, 1, weights[0]), (1, 2, weights[1]), (2, 0, weights[2])], pos)


def square(weights=(1, 1, 1, 1), chord: bool = False):
    """C4 on v0..v3 (clockwise from the top left), optionally with chord v0-v2."""
    pos = [(0.0, 1.0), (1.0, 1.0), (1.0, 0.0), (0.0, 0.0)]
    edges = [(0, 1, weights[0]), (1, 2, weights[1]), (2, 3, weights[2]), (3, 0, weights[3])]
    if chord:
        edges.append((0, 2, 1))
    return embed_from_coordinates(4, edges, pos)


def path(n: int, weights=None):
    ws = weights or [1] * (n - 1)
    return embed_from_coordinates(n, [(i, i + 1, ws[i]) for i in range(n - 1)], [(float(i), 0.0) for i in range(n)])


def minmc_suite(count: int = 320, seed: int = 2024) -> list[MinMCInstance]:
    """Grid and outerplanar instances: <= 12 vertices, <= 18 edges, k in 1..3, weights 1..5."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        k = 1 + i % 3
        s = rng.randrange(1 << 30)
        if i % 2 == 0:
            rows, cols = rng.choice(GRID_SHAPES)
            inst = gen_grid(rows, cols, k, s, (1, 5))
        else:
            n = rng.randint(max(4, 2 * k), 12)
            inst = gen_outerplanar(n, rng.randint(0, min(n - 3, 18 - n)), k, s, (1, 5))
        assert inst.graph.vertex_count <= 12 and len(inst.graph.edges) <= 18
        out.append(inst)
    return out


def mtc_suite(count: int = 220, seed: int = 99) -> list[MTCInstance]:
    """Grid and outerplanar graphs with <= 18 edges and 2..5 outer terminals."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if i % 2 == 0:
            g = grid_graph(*rng.choice(GRID_SHAPES), [rng.randint(1, 5) for _ in range(17)])
        else:
            n = rng.randint(5, 12)
            g = outerplanar_graph(n, rng.randint(0, min(n - 3, 18 - n)), rng, (1, 5))
        t = rng.randint(2, min(5, len(g.boundary_vertices)))
        out.append(gen_mtc(g, t, rng.randrange(1 << 30)))
    return out
