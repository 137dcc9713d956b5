"""Seeded generators for the instance families used in tests and benchmarks."""

from __future__ import annotations

import dataclasses
import math
import random
from typing import Sequence

from .graph import Edge, PlanarGraph
from .instances import MCCInstance, MinMCInstance, MTCInstance


@dataclasses.dataclass(frozen=True)
class GeneratorSpec:
    family: str  # chain | star | grid | outerplanar
    size: tuple[int, ...]
    k: int
    weight_range: tuple[int, int] = (1, 1)
    seed: int = 0


def _signed_area(pts: Sequence[tuple[float, float]]) -> float:
    return 0.5 * sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1]))


def embed_from_coordinates(n: int, edges: Sequence[tuple[int, int, int]],
                           pos: Sequence[tuple[float, float]]) -> PlanarGraph:
    """Straight-line embedding; edge ``i`` of ``edges`` gets id ``i``.

    Rotations list edges clockwise (decreasing angle).  With the face rule of
    :mod:`planarcut.graph` inner faces are then traced counterclockwise and
    the outer face clockwise, so the outer face is the one of negative area.
    """
    es = [Edge(i, u, v, w) for i, (u, v, w) in enumerate(edges)]
    inc: list[list[tuple[float, int]]] = [[] for _ in range(n)]
    for e in es:
        for a, b in ((e.u, e.v), (e.v, e.u)):
            ang = math.atan2(pos[b][1] - pos[a][1], pos[b][0] - pos[a][0])
            inc[a].append((-ang, e.id))
    rotation = tuple(tuple(eid for _, eid in sorted(lst)) for lst in inc)
    if not es:
        return PlanarGraph(n, (), rotation, None)
    g = PlanarGraph(n, tuple(es), rotation, (0, es[0].u))
    best = None
    for f in g.faces:
        area = _signed_area([pos[t] for _, t in f.boundary_walk])
        if best is None or area < best[0]:
            best = (area, f)
    return PlanarGraph(n, tuple(es), rotation, min(best[1].boundary_walk))


def _weights(rng: random.Random, m: int, weight_range: tuple[int, int]) -> list[int]:
    lo, hi = weight_range
    return [rng.randint(lo, hi) for _ in range(m)]


def gen_chain(k: int, weights: Sequence[int] | None = None) -> MinMCInstance:
    """Path ``s1, s'1, s2, s'2, ..., sk, s'k`` with pairs ``(2i, 2i+1)``."""
    n = 2 * k
    ws = list(weights) if weights is not None else [1] * max(n - 1, 0)
    if len(ws) != max(n - 1, 0):
        raise ValueError(f"chain with k={k} needs {n - 1} weights")
    pos = [(float(i), 0.0) for i in range(n)]
    g = embed_from_coordinates(n, [(i, i + 1, ws[i]) for i in range(n - 1)], pos)
    return MinMCInstance(g, tuple((2 * i, 2 * i + 1) for i in range(k)))


def gen_star(leaf_pairs: int, weights: Sequence[int] | None = None) -> MinMCInstance:
    """Center 0 with leaves ``1..2p``; pairs ``(1,2), (3,4), ...``."""
    leaves = 2 * leaf_pairs
    ws = list(weights) if weights is not None else [1] * leaves
    pos = [(0.0, 0.0)] + [(math.cos(2 * math.pi * i / max(leaves, 1)),
                           -math.sin(2 * math.pi * i / max(leaves, 1))) for i in range(leaves)]
    g = embed_from_coordinates(leaves + 1, [(0, i + 1, ws[i]) for i in range(leaves)], pos)
    return MinMCInstance(g, tuple((2 * i + 1, 2 * i + 2) for i in range(leaf_pairs)))


def grid_graph(rows: int, cols: int, weights: Sequence[int] | None = None) -> PlanarGraph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    ws = list(weights) if weights is not None else [1] * len(edges)
    pos = [(float(c), float(-r)) for r in range(rows) for c in range(cols)]
    return embed_from_coordinates(rows * cols, [(u, v, w) for (u, v), w in zip(edges, ws)], pos)


def _pair_up(rng: random.Random, boundary: list[int], k: int) -> tuple[tuple[int, int], ...]:
    if 2 * k > len(boundary):
        raise ValueError(f"cannot place {2 * k} distinct terminals on {len(boundary)} boundary vertices")
    chosen = rng.sample(boundary, 2 * k)
    return tuple((chosen[2 * i], chosen[2 * i + 1]) for i in range(k))


def gen_grid(rows: int, cols: int, k: int, seed: int = 0,
             weight_range: tuple[int, int] = (1, 1)) -> MinMCInstance:
    rng = random.Random(seed)
    m = rows * (cols - 1) + cols * (rows - 1)
    g = grid_graph(rows, cols, _weights(rng, m, weight_range))
    return MinMCInstance(g, _pair_up(rng, g.boundary_vertices, k))


def outerplanar_graph(n: int, chords: int, rng: random.Random,
                      weight_range: tuple[int, int] = (1, 1)) -> PlanarGraph:
    """Cycle on ``n`` vertices plus up to ``chords`` random non-crossing chords."""
    edges = [(i, (i + 1) % n) for i in range(n)] if n >= 3 else ([(0, 1)] if n == 2 else [])
    candidates = [(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]
    rng.shuffle(candidates)
    added: list[tuple[int, int]] = []
    for a, b in candidates:
        if len(added) >= chords:
            break
        if all(not (a < c < b < d or c < a < d < b) for c, d in added):
            added.append((a, b))
    edges += sorted(added)
    ws = _weights(rng, len(edges), weight_range)
    pos = [(math.cos(2 * math.pi * i / n), -math.sin(2 * math.pi * i / n)) for i in range(n)]
    return embed_from_coordinates(n, [(u, v, w) for (u, v), w in zip(edges, ws)], pos)


def gen_outerplanar(n: int, chords: int, k: int, seed: int = 0,
                    weight_range: tuple[int, int] = (1, 1)) -> MinMCInstance:
    rng = random.Random(seed)
    g = outerplanar_graph(n, chords, rng, weight_range)
    return MinMCInstance(g, _pair_up(rng, g.boundary_vertices, k))


def gen_mtc(graph: PlanarGraph, count: int, seed: int = 0) -> MTCInstance:
    rng = random.Random(seed)
    return MTCInstance(graph, tuple(rng.sample(graph.boundary_vertices, count)))


def gen_mcc(graph: PlanarGraph, sizes: Sequence[int], seed: int = 0) -> MCCInstance:
    rng = random.Random(seed)
    chosen = rng.sample(graph.boundary_vertices, sum(sizes))
    out, i = [], 0
    for s in sizes:
        out.append(tuple(chosen[i:i + s]))
        i += s
    return MCCInstance(graph, tuple(out))


def generate(spec: GeneratorSpec) -> MinMCInstance:
    if spec.family == "chain":
        rng = random.Random(spec.seed)
        return gen_chain(spec.k, _weights(rng, max(2 * spec.k - 1, 0), spec.weight_range))
    if spec.family == "star":
        rng = random.Random(spec.seed)
        return gen_star(spec.k, _weights(rng, 2 * spec.k, spec.weight_range))
    if spec.family == "grid":
        rows, cols = spec.size
        return gen_grid(rows, cols, spec.k, spec.seed, spec.weight_range)
    if spec.family in ("outerplanar", "outerplanar-random"):
        n, chords = spec.size
        return gen_outerplanar(n, chords, spec.k, spec.seed, spec.weight_range)
    raise ValueError(f"unknown family {spec.family!r}")
