"""Enumeration of clusterings and of good-top structure guesses.

Clusterings are generated as restricted growth strings over the terminals in
input order, so the stream order is deterministic and an index into it can be
used to split work between processes.
"""

from __future__ import annotations

import dataclasses
import itertools
from math import comb, factorial
from typing import Iterator, Mapping, Sequence

from .graph import GraphError


@dataclasses.dataclass(frozen=True)
class Clustering:
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}


@dataclasses.dataclass(frozen=True)
class StructureChoice:
    good_top: tuple[int, ...]  # block indices, increasing
    first_terminal: Mapping[int, int]
    runs: tuple[tuple[int, ...], ...]  # per good block: its terminals clockwise from the first


def _restricted_growth(elements: Sequence[int], forbidden: set[frozenset[int]],
                       max_blocks: int | None) -> Iterator[tuple[tuple[int, ...], ...]]:
    n = len(elements)
    labels = [0] * n
    limit = n if max_blocks is None else max_blocks

    def rec(i: int, used: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(used)]
            for x, lab in zip(elements, labels):
                blocks[lab].append(x)
            yield tuple(tuple(b) for b in blocks)
            return
        x = elements[i]
        for lab in range(min(used + 1, limit)):
            if any(labels[j] == lab and frozenset((x, elements[j])) in forbidden for j in range(i)):
                continue
            labels[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    if n == 0:
        yield ()
        return
    yield from rec(0, 0)


def enumerate_clusterings(pairs: Sequence[tuple[int, int]], max_blocks: int | None = None) -> Iterator[Clustering]:
    """All partitions of the ``2k`` terminals into at most ``k+1`` blocks splitting every pair."""
    terminals = [v for p in pairs for v in p]
    if len(set(terminals)) != len(terminals):
        raise GraphError("source/sink terminals must be distinct")
    k = len(pairs)
    cap = k + 1 if max_blocks is None else max_blocks
    forbidden = {frozenset(p) for p in pairs}
    for blocks in _restricted_growth(terminals, forbidden, cap):
        yield Clustering(blocks)


def _noncrossing(order: Sequence[int], conflict, cap: int | None) -> Iterator[Clustering]:
    """Non-crossing partitions of ``order`` (a cyclic sequence) avoiding conflicting blocks.

    Elements are placed in order; joining an existing block closes every
    block used since that block's latest element, which is exactly the
    condition for the partition to stay non-crossing.
    """
    blocks: list[list[int]] = []
    last: list[int] = []  # index in ``order`` of each block's latest element
    closed: list[bool] = []

    def rec(i: int) -> Iterator[Clustering]:
        if i == len(order):
            yield Clustering(tuple(tuple(b) for b in blocks))
            return
        x = order[i]
        for b in range(len(blocks)):
            if closed[b] or any(conflict(x, y) for y in blocks[b]):
                continue
            shut = [c for c in range(len(blocks)) if c != b and not closed[c] and last[c] > last[b]]
            for c in shut:
                closed[c] = True
            blocks[b].append(x)
            prev, last[b] = last[b], i
            yield from rec(i + 1)
            last[b] = prev
            blocks[b].pop()
            for c in shut:
                closed[c] = False
        if cap is None or len(blocks) < cap:
            blocks.append([x])
            last.append(i)
            closed.append(False)
            yield from rec(i + 1)
            blocks.pop()
            last.pop()
            closed.pop()

    if not order:
        yield Clustering(())
        return
    yield from rec(0)


def _in_order(terminals: Sequence[int], boundary_order: Sequence[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(boundary_order)}
    missing = [t for t in terminals if t not in pos]
    if missing:
        raise GraphError(f"terminal {missing[0]} is not in the boundary order")
    return sorted(terminals, key=pos.__getitem__)


def enumerate_noncrossing_clusterings(pairs: Sequence[tuple[int, int]], boundary_order: Sequence[int],
                                     max_blocks: int | None = None) -> Iterator[Clustering]:
    """The clusterings of :func:`enumerate_clusterings` that pass :func:`check_noncrossing`."""
    terminals = [v for p in pairs for v in p]
    if len(set(terminals)) != len(terminals):
        raise GraphError("source/sink terminals must be distinct")
    mate = {}
    for a, b in pairs:
        mate[a], mate[b] = b, a
    cap = len(pairs) + 1 if max_blocks is None else max_blocks
    yield from _noncrossing(_in_order(terminals, boundary_order), lambda x, y: mate[x] == y, cap)


def enumerate_noncrossing_refinements(clusters: Sequence[Sequence[int]],
                                      boundary_order: Sequence[int]) -> Iterator[Clustering]:
    """The refinements of :func:`enumerate_refinements` that pass :func:`check_noncrossing`."""
    terminals = [v for c in clusters for v in c]
    if len(set(terminals)) != len(terminals):
        raise GraphError("cluster terminals must be distinct")
    owner = {v: i for i, c in enumerate(clusters) for v in c}
    yield from _noncrossing(_in_order(terminals, boundary_order), lambda x, y: owner[x] != owner[y], None)


def enumerate_refinements(clusters: Sequence[Sequence[int]]) -> Iterator[Clustering]:
    """Partitions of all cluster terminals whose blocks each stay inside one cluster."""
    terminals = [v for c in clusters for v in c]
    if len(set(terminals)) != len(terminals):
        raise GraphError("cluster terminals must be distinct")
    owner = {v: i for i, c in enumerate(clusters) for v in c}
    forbidden = {frozenset((a, b)) for a in terminals for b in terminals if owner[a] != owner[b]}
    for blocks in _restricted_growth(terminals, forbidden, None):
        yield Clustering(blocks)


def stirling2(n: int, k: int) -> int:
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def candidate_count(k: int) -> int:
    """Partitions of ``2k`` terminals into at most ``k+1`` blocks, before pair filtering."""
    return sum(stirling2(2 * k, j) for j in range(k + 2))


def clustering_bound(k: int) -> float:
    return (k + 1) ** (2 * k) / factorial(k + 1)


def _cyclic_runs(labels: Sequence[int]) -> int:
    if not labels:
        return 0
    changes = sum(1 for a, b in zip(labels, labels[1:] + labels[:1]) if a != b)
    return max(changes, 1)


def check_noncrossing(clustering: Clustering, boundary_order: Sequence[int]) -> bool:
    """True iff no two blocks interleave along the cyclic boundary order (nesting is fine)."""
    block = clustering.block_of()
    seq = [block[v] for v in boundary_order if v in block]
    for a, b in itertools.combinations(range(len(clustering)), 2):
        sub = [x for x in seq if x == a or x == b]
        if _cyclic_runs(sub) > 2:
            return False
    return True


def _consecutive_runs(runs: Sequence[Sequence[int]], position: Mapping[int, int]) -> bool:
    listed = sorted((t for r in runs for t in r), key=position.__getitem__)
    at = {t: i for i, t in enumerate(listed)}
    size = len(listed)
    for r in runs:
        start = at[r[0]]
        if any(listed[(start + j) % size] != t for j, t in enumerate(r)):
            return False
    return True


def enumerate_structures(clustering: Clustering, boundary_order: Sequence[int],
                         stats: dict | None = None) -> Iterator[StructureChoice]:
    """Good-top subsets (size >= 2, increasing bitmask) times first-terminal guesses.

    Guesses whose good-top terminals are not consecutive per cluster, read
    clockwise from the designated first terminal, are dropped.
    """
    position = {v: i for i, v in enumerate(boundary_order)}
    blocks = [tuple(sorted(b, key=position.__getitem__)) for b in clustering.blocks]
    kk = len(blocks)
    for mask in range(1, 1 << kk):
        good = tuple(i for i in range(kk) if mask >> i & 1)
        if len(good) < 2:
            continue
        for firsts in itertools.product(*(blocks[i] for i in good)):
            if stats is not None:
                stats["structure_candidates"] = stats.get("structure_candidates", 0) + 1
            runs = []
            for i, f in zip(good, firsts):
                b = blocks[i]
                j = b.index(f)
                runs.append(b[j:] + b[:j])
            if not _consecutive_runs(runs, position):
                continue
            yield StructureChoice(good, dict(zip(good, firsts)), tuple(runs))
