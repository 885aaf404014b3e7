"""Directed simple-cycle enumeration and per-vertex cycle degrees.

The cycle degree of a vertex for length n is the number of directed simple
cycles of exactly n arcs that pass through it.  A graph is "irregular" for
length n when these degrees are pairwise distinct over all vertices.

Enumeration is an anchored depth-first search: for each anchor vertex s in
ascending order, simple directed paths starting at s are extended using only
vertices with labels greater than s, and a cycle is emitted when a path of n
vertices has an arc back to s.  Each rotation class is therefore produced
exactly once, already in canonical form (minimum label first), and the full
witness list comes out sorted lexicographically.
"""
from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Iterable

from .digraph import OrientedGraph

__all__ = [
    "CycleLengthTooSmall",
    "CycleWitness",
    "DegreeProfile",
    "enumerate_cycles",
    "degree_profile",
    "is_irregular",
]


class CycleLengthTooSmall(ValueError):
    """Cycle length below 3 was requested; no oriented cycle is that short."""


@dataclass(frozen=True, order=True)
class CycleWitness:
    """One directed simple cycle, stored rotation-canonically.

    The vertex sequence starts at the cycle's minimum label; consecutive
    vertices (and the last back to the first) are joined by arcs of the host
    graph.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        if len(vs) < 3:
            raise CycleLengthTooSmall(f"cycle needs at least 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise ValueError(f"cycle vertices must be distinct: {vs}")
        if vs[0] != min(vs):
            raise ValueError(f"cycle must start at its minimum label: {vs}")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[tuple[int, int]]:
        """The n arcs of the cycle, in traversal order."""
        vs = self.vertices
        return list(zip(vs, vs[1:] + vs[:1]))

    def spans(self, g: OrientedGraph) -> bool:
        """True when every arc of the cycle is present in *g*."""
        return all(a in g.arcs for a in self.arcs())


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex cycle degrees for one (graph, cycle length) pair.

    ``degrees[i]`` is the degree of vertex ``i + 1``; entries follow the
    1-based vertex order used everywhere else.  The conservation law
    ``sum(degrees) == cycle_length * total_cycles`` is enforced on
    construction.
    """

    cycle_length: int
    degrees: tuple[int, ...]
    total_cycles: int

    def __post_init__(self) -> None:
        if any(d < 0 for d in self.degrees):
            raise ValueError("degrees must be nonnegative")
        if sum(self.degrees) != self.cycle_length * self.total_cycles:
            raise ValueError(
                f"degree sum {sum(self.degrees)} != "
                f"{self.cycle_length} * {self.total_cycles}"
            )

    @property
    def order(self) -> int:
        return len(self.degrees)

    def degree_of(self, v: int) -> int:
        if not (1 <= v <= len(self.degrees)):
            raise IndexError(f"vertex {v} outside 1..{len(self.degrees)}")
        return self.degrees[v - 1]

    def is_distinct(self) -> bool:
        """True when all per-vertex degrees are pairwise distinct."""
        return len(set(self.degrees)) == len(self.degrees)


def _cycles_from_anchor(
    g: OrientedGraph, n: int, s: int, emit: Callable[[tuple[int, ...]], None]
) -> None:
    """Emit every length-n cycle whose minimum vertex is the anchor *s*."""
    out = g._out
    arcs = g.arcs
    used = bytearray(g.order + 1)
    used[s] = 1
    path = [s]

    def extend(v: int, slots: int) -> None:
        depth = len(path)
        if depth == n:
            if (v, s) in arcs:
                emit(tuple(path))
            return
        if n - depth > slots:
            return
        nbrs = out[v]
        for w in nbrs[bisect_right(nbrs, s):]:
            if not used[w]:
                used[w] = 1
                path.append(w)
                extend(w, slots - 1)
                path.pop()
                used[w] = 0

    extend(s, g.order - s)


def _census_worker(args: tuple[int, frozenset, int, tuple[int, ...]]):
    order, arcs, n, anchors = args
    g = OrientedGraph(order, arcs)
    blocks = []
    for s in anchors:
        found: list[tuple[int, ...]] = []
        _cycles_from_anchor(g, n, s, found.append)
        blocks.append((s, found))
    return blocks


def _iter_cycle_tuples(g: OrientedGraph, n: int, jobs: int = 1) -> Iterable[tuple[int, ...]]:
    if jobs <= 1:
        out: list[tuple[int, ...]] = []
        for s in g.vertices():
            _cycles_from_anchor(g, n, s, out.append)
        return out
    from concurrent.futures import ProcessPoolExecutor

    anchors = list(g.vertices())
    chunks = [tuple(anchors[i::jobs]) for i in range(jobs) if anchors[i::jobs]]
    per_anchor: dict[int, list[tuple[int, ...]]] = {}
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        work = [(g.order, g.arcs, n, chunk) for chunk in chunks]
        for blocks in pool.map(_census_worker, work):
            for s, found in blocks:
                per_anchor[s] = found
    return list(itertools.chain.from_iterable(per_anchor[s] for s in sorted(per_anchor)))


def _check_length(n: int) -> None:
    if n < 3:
        raise CycleLengthTooSmall(f"cycle length must be at least 3, got {n}")


def enumerate_cycles(g: OrientedGraph, n: int, jobs: int = 1) -> list[CycleWitness]:
    """All directed simple cycles of length exactly *n*, each exactly once.

    Witnesses are rotation-canonical and the list is sorted lexicographically
    by vertex sequence.  Returns an empty list when n exceeds the order.
    """
    _check_length(n)
    if n > g.order:
        return []
    return [CycleWitness(t) for t in _iter_cycle_tuples(g, n, jobs)]


def degree_profile(g: OrientedGraph, n: int, jobs: int = 1) -> DegreeProfile:
    """Count, for every vertex, the length-n cycles passing through it."""
    _check_length(n)
    counts = [0] * (g.order + 1)
    total = 0
    if n <= g.order:
        for cyc in _iter_cycle_tuples(g, n, jobs):
            total += 1
            for v in cyc:
                counts[v] += 1
    return DegreeProfile(n, tuple(counts[1:]), total)


def is_irregular(g: OrientedGraph, n: int) -> bool:
    """True when all per-vertex length-n cycle degrees are pairwise distinct."""
    return degree_profile(g, n).is_distinct()
