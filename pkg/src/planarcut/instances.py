"""Problem instances over an embedded planar graph."""

from __future__ import annotations

import dataclasses
from typing import Union

from .graph import GraphError, PlanarGraph
from .mtc import MTCInstance


def _check_terminals(graph: PlanarGraph, terminals: list[int]) -> None:
    if len(set(terminals)) != len(terminals):
        raise GraphError("terminals must be distinct")
    for t in terminals:
        if not 0 <= t < graph.vertex_count:
            raise GraphError(f"terminal {t} is not a vertex")
        if graph.edges and not graph.on_outer_face(t):
            raise GraphError(f"terminal {t} does not lie on the outer face "
                             "(every terminal must be a vertex of the outer face walk)")


@dataclasses.dataclass(frozen=True)
class MinMCInstance:
    graph: PlanarGraph
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(s), int(t)) for s, t in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        _check_terminals(self.graph, [v for p in pairs for v in p])

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def terminals(self) -> list[int]:
        return [v for p in self.pairs for v in p]

    def separation_pairs(self) -> list[tuple[int, int]]:
        return list(self.pairs)


@dataclasses.dataclass(frozen=True)
class MCCInstance:
    graph: PlanarGraph
    clusters: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        clusters = tuple(tuple(int(v) for v in c) for c in self.clusters)
        if any(not c for c in clusters):
            raise GraphError("clusters must be nonempty")
        object.__setattr__(self, "clusters", clusters)
        _check_terminals(self.graph, [v for c in clusters for v in c])

    @property
    def terminals(self) -> list[int]:
        return [v for c in self.clusters for v in c]

    def separation_pairs(self) -> list[tuple[int, int]]:
        out = []
        for i, a in enumerate(self.clusters):
            for b in self.clusters[i + 1:]:
                out += [(u, v) for u in a for v in b]
        return out


Instance = Union[MinMCInstance, MCCInstance, MTCInstance]

__all__ = ["Instance", "MCCInstance", "MinMCInstance", "MTCInstance"]
