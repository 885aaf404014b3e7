"""Exhaustive scans over all labeled oriented graphs of a small order.

Every oriented graph on k labeled vertices is indexed by one integer in
``[0, 3**(k*(k-1)//2))``: each unordered vertex pair, taken in lexicographic
order, contributes one base-3 digit (0 = no arc, 1 = arc low->high, 2 = arc
high->low), with the first pair in the least-significant position.  Scans
walk this index space in order, and ties between extremal graphs are broken
by the smallest index, so every report is deterministic regardless of batch
size or worker count.

Inside a scan, cycle degrees are computed on whole batches at once: the
base-3 digits of a batch are expanded into boolean arc indicators and each
candidate cycle becomes an AND across its arcs.  This fast path is
independent of the depth-first census and the two are property-tested for
equality on large random samples.

Orders above 6 are desk-hostile (3^21 graphs at order 7) and are gated: the
caller must pass ``allow_long_runs=True`` and set the ``IRREG_ALLOW_LONG_RUNS``
environment variable.  Order 8 and beyond is refused outright.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from .census import CycleLengthTooSmall
from .digraph import OrientedGraph

__all__ = [
    "OrderTooLarge",
    "SearchReport",
    "DEFAULT_ORDER_CAP",
    "HARD_ORDER_CAP",
    "LONG_RUN_ENV",
    "graph_count",
    "pair_list",
    "graph_from_index",
    "index_of_graph",
    "enumerate_oriented_graphs",
    "max_degree_sum",
    "max_vertex_degree",
    "exists_irregular",
]

DEFAULT_ORDER_CAP = 6
HARD_ORDER_CAP = 7
LONG_RUN_ENV = "IRREG_ALLOW_LONG_RUNS"

_BATCH = 1 << 16


class OrderTooLarge(ValueError):
    """Requested order exceeds the exhaustive-scan cap."""


@dataclass
class SearchReport:
    """Outcome of one exhaustive scan.

    ``value`` is an integer for the max objectives and a bool for the
    existence objective; ``witness`` attains the value when one exists.
    ``graphs_scanned`` equals the full space size for exhaustive scans and
    the position after the first hit when an existence scan stops early.
    """

    order: int
    cycle_length: int
    objective: str
    value: int | bool
    witness: OrientedGraph | None
    graphs_scanned: int


def _require_order(k: int, allow_long_runs: bool) -> None:
    if k < 1:
        raise OrderTooLarge(f"order must be positive, got {k}")
    if k <= DEFAULT_ORDER_CAP:
        return
    if k == HARD_ORDER_CAP:
        if allow_long_runs and os.environ.get(LONG_RUN_ENV):
            return
        raise OrderTooLarge(
            f"order {k} scans 3^21 graphs; pass allow_long_runs=True and set "
            f"{LONG_RUN_ENV}=1 to proceed"
        )
    raise OrderTooLarge(f"order {k} exceeds the hard cap {HARD_ORDER_CAP}")


def _check_length(n: int) -> None:
    if n < 3:
        raise CycleLengthTooSmall(f"cycle length must be at least 3, got {n}")


def pair_list(k: int) -> list[tuple[int, int]]:
    """Unordered vertex pairs of 1..k in lexicographic order."""
    return [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]


def graph_count(k: int) -> int:
    """Number of labeled oriented graphs on k vertices: 3^(k(k-1)/2)."""
    return 3 ** (k * (k - 1) // 2)


def graph_from_index(k: int, index: int) -> OrientedGraph:
    """Decode an enumeration index into its oriented graph."""
    if not 0 <= index < graph_count(k):
        raise ValueError(f"index {index} outside [0, {graph_count(k)})")
    arcs = []
    rem = index
    for i, j in pair_list(k):
        rem, digit = divmod(rem, 3)
        if digit == 1:
            arcs.append((i, j))
        elif digit == 2:
            arcs.append((j, i))
    return OrientedGraph(k, arcs)


def index_of_graph(g: OrientedGraph) -> int:
    """Inverse of :func:`graph_from_index`."""
    index = 0
    weight = 1
    for i, j in pair_list(g.order):
        if (i, j) in g.arcs:
            index += weight
        elif (j, i) in g.arcs:
            index += 2 * weight
        weight *= 3
    return index


def enumerate_oriented_graphs(k: int, allow_long_runs: bool = False) -> Iterator[OrientedGraph]:
    """Yield every labeled oriented graph on k vertices, in index order."""
    _require_order(k, allow_long_runs)

    def stream() -> Iterator[OrientedGraph]:
        for index in range(graph_count(k)):
            yield graph_from_index(k, index)

    return stream()


# ---------------------------------------------------------------------------
# Vectorized batch evaluation
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _cycle_tables(k: int, n: int) -> tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...]], ...]:
    """Canonical candidate cycles among k labels with their arc requirements.

    Each entry pairs a rotation-canonical vertex sequence with, for every
    arc, the (pair index, required digit) it needs in the base-3 encoding.
    """
    pair_index = {p: t for t, p in enumerate(pair_list(k))}
    tables = []
    for combo in combinations(range(1, k + 1), n):
        first = combo[0]
        for rest in permutations(combo[1:]):
            seq = (first,) + rest
            arcs = []
            for a, b in zip(seq, seq[1:] + (first,)):
                lo, hi = (a, b) if a < b else (b, a)
                arcs.append((pair_index[(lo, hi)], 1 if a < b else 2))
            tables.append((seq, tuple(arcs)))
    return tuple(tables)


def _digit_matrix(start: int, stop: int, pair_count: int) -> np.ndarray:
    indices = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((indices.size, pair_count), dtype=np.int8)
    rem = indices
    for t in range(pair_count):
        digits[:, t] = rem % 3
        rem = rem // 3
    return digits


def _batch_counts(digits: np.ndarray, tables) -> np.ndarray:
    """Cycle count per graph in the batch."""
    eq = (digits == 1, digits == 2)
    counts = np.zeros(digits.shape[0], dtype=np.int32)
    for _, arcs in tables:
        t, d = arcs[0]
        hit = eq[d - 1][:, t].copy()
        for t, d in arcs[1:]:
            hit &= eq[d - 1][:, t]
        counts += hit
    return counts


def _batch_degrees(digits: np.ndarray, tables, k: int) -> np.ndarray:
    """Per-vertex cycle degrees (rows: graphs, columns: vertices 1..k)."""
    eq = (digits == 1, digits == 2)
    degrees = np.zeros((digits.shape[0], k), dtype=np.int32)
    for seq, arcs in tables:
        t, d = arcs[0]
        hit = eq[d - 1][:, t].copy()
        for t, d in arcs[1:]:
            hit &= eq[d - 1][:, t]
        degrees[:, [v - 1 for v in seq]] += hit[:, None]
    return degrees


def degrees_by_index(k: int, n: int, indices) -> np.ndarray:
    """Cycle-degree rows for arbitrary enumeration indices (test hook)."""
    _check_length(n)
    indices = np.asarray(indices, dtype=np.int64)
    pair_count = k * (k - 1) // 2
    digits = np.empty((indices.size, pair_count), dtype=np.int8)
    rem = indices.copy()
    for t in range(pair_count):
        digits[:, t] = rem % 3
        rem //= 3
    return _batch_degrees(digits, _cycle_tables(k, n), k)


# ---------------------------------------------------------------------------
# Scan drivers
# ---------------------------------------------------------------------------

def _scan_chunk(args: tuple[int, int, str, int, int]):
    """Scan [start, stop) for one objective; used directly and via workers.

    Returns (best_value, best_index, first_hit) where first_hit is only
    meaningful for the existence objective (None when the chunk is clean).
    """
    k, n, objective, start, stop = args
    tables = _cycle_tables(k, n) if n <= k else ()
    pair_count = k * (k - 1) // 2
    best_value = -1
    best_index = -1
    for lo in range(start, stop, _BATCH):
        hi = min(lo + _BATCH, stop)
        digits = _digit_matrix(lo, hi, pair_count)
        if objective == "max_degree_sum":
            counts = _batch_counts(digits, tables)
            pos = int(counts.argmax())
            value = int(counts[pos])
            if value > best_value:
                best_value, best_index = value, lo + pos
        elif objective == "max_vertex_degree":
            degrees = _batch_degrees(digits, tables, k)
            row_max = degrees.max(axis=1)
            pos = int(row_max.argmax())
            value = int(row_max[pos])
            if value > best_value:
                best_value, best_index = value, lo + pos
        elif objective == "exists_irregular":
            degrees = _batch_degrees(digits, tables, k)
            ordered = np.sort(degrees, axis=1)
            distinct = (np.diff(ordered, axis=1) != 0).all(axis=1)
            hits = np.flatnonzero(distinct)
            if hits.size:
                return (-1, -1, lo + int(hits[0]))
        else:
            raise ValueError(f"unknown objective {objective!r}")
    if objective == "exists_irregular":
        return (-1, -1, None)
    return (best_value, best_index, None)


def _chunk_ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    pieces = max(jobs * 4, 1)
    step = -(-total // pieces)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run_scan(k: int, n: int, objective: str, jobs: int, allow_long_runs: bool) -> SearchReport:
    _require_order(k, allow_long_runs)
    _check_length(n)
    total = graph_count(k)
    if jobs <= 1:
        best_value, best_index, first_hit = _scan_chunk((k, n, objective, 0, total))
    else:
        from concurrent.futures import ProcessPoolExecutor

        ranges = _chunk_ranges(total, jobs)
        best_value, best_index, first_hit = -1, -1, None
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            work = [(k, n, objective, lo, hi) for lo, hi in ranges]
            # Results are consumed in submission order, so the first chunk
            # reporting a hit holds the globally smallest hit index.
            for value, index, hit in pool.map(_scan_chunk, work):
                if objective == "exists_irregular":
                    if hit is not None:
                        first_hit = hit
                        pool.shutdown(wait=False, cancel_futures=True)
                        break
                elif value > best_value:
                    best_value, best_index = value, index

    if objective == "exists_irregular":
        if first_hit is None:
            return SearchReport(k, n, objective, False, None, total)
        return SearchReport(k, n, objective, True, graph_from_index(k, first_hit), first_hit + 1)
    witness = graph_from_index(k, best_index)
    value = best_value * n if objective == "max_degree_sum" else best_value
    return SearchReport(k, n, objective, value, witness, total)


def max_degree_sum(k: int, n: int, jobs: int = 1, allow_long_runs: bool = False) -> SearchReport:
    """Largest sum of length-n cycle degrees over all order-k graphs."""
    return _run_scan(k, n, "max_degree_sum", jobs, allow_long_runs)


def max_vertex_degree(k: int, n: int, jobs: int = 1, allow_long_runs: bool = False) -> SearchReport:
    """Largest single-vertex length-n cycle degree over all order-k graphs."""
    return _run_scan(k, n, "max_vertex_degree", jobs, allow_long_runs)


def exists_irregular(k: int, n: int, jobs: int = 1, allow_long_runs: bool = False) -> SearchReport:
    """Whether some order-k graph has pairwise-distinct length-n degrees.

    Stops at the first witness in enumeration order; reports False only
    after scanning the entire space.
    """
    if k < 2:
        raise OrderTooLarge(f"existence scan needs order >= 2, got {k}")
    return _run_scan(k, n, "exists_irregular", jobs, allow_long_runs)
