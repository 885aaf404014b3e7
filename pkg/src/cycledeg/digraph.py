"""Oriented-graph value type: construction, queries, and transforms.

An oriented graph is a finite directed graph with no loops and no pair of
mutually inverse arcs (u, v) and (v, u).  Vertices carry 1-based integer
labels 1..order, and all external representations (serialization, reports,
witness lists) use those labels directly.

Graph values are immutable: every transform returns a new graph, so
instances can be shared freely across threads and worker processes.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "GraphError",
    "LoopArc",
    "SymmetricPair",
    "OutOfRange",
    "NotBijective",
    "OrientedGraph",
    "make_graph",
]


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class LoopArc(GraphError):
    """An arc of the form (v, v) was supplied."""


class SymmetricPair(GraphError):
    """Both (u, v) and (v, u) were supplied for the same vertex pair."""


class OutOfRange(GraphError):
    """A vertex label lies outside 1..order."""


class NotBijective(GraphError):
    """A relabeling is not a bijection on 1..order."""


class OrientedGraph:
    """Immutable labeled digraph without loops or symmetric arc pairs.

    Arcs are stored both as a frozenset (O(1) membership) and as per-vertex
    neighbor tuples sorted in ascending label order, which keeps every
    traversal in this package deterministic.
    """

    __slots__ = ("order", "arcs", "_out", "_in")

    def __init__(self, order: int, arcs: Iterable[tuple[int, int]] = ()) -> None:
        if not isinstance(order, int) or order < 1:
            raise OutOfRange(f"order must be a positive integer, got {order!r}")
        arc_set = frozenset((int(u), int(v)) for u, v in arcs)
        out_lists: list[list[int]] = [[] for _ in range(order + 1)]
        in_lists: list[list[int]] = [[] for _ in range(order + 1)]
        for u, v in arc_set:
            if u == v:
                raise LoopArc(f"loop arc ({u}, {v}) is not allowed")
            if not (1 <= u <= order and 1 <= v <= order):
                raise OutOfRange(f"arc ({u}, {v}) has an endpoint outside 1..{order}")
            if (v, u) in arc_set:
                raise SymmetricPair(f"arcs ({u}, {v}) and ({v}, {u}) are both present")
            out_lists[u].append(v)
            in_lists[v].append(u)
        self.order = order
        self.arcs = arc_set
        self._out = tuple(tuple(sorted(ns)) for ns in out_lists)
        self._in = tuple(tuple(sorted(ns)) for ns in in_lists)

    # ---- queries -----------------------------------------------------------

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        """All vertex labels, ascending."""
        return range(1, self.order + 1)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Heads of arcs leaving *v*, in ascending label order."""
        self._check_vertex(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """Tails of arcs entering *v*, in ascending label order."""
        self._check_vertex(v)
        return self._in[v]

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._in[v])

    def sorted_arcs(self) -> list[tuple[int, int]]:
        """Arcs in lexicographic (tail, head) order."""
        return sorted(self.arcs)

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.order):
            raise OutOfRange(f"vertex {v} outside 1..{self.order}")

    # ---- transforms --------------------------------------------------------

    def reverse(self) -> "OrientedGraph":
        """Flip every arc.  An involution; cannot create symmetric pairs."""
        return OrientedGraph(self.order, ((v, u) for u, v in self.arcs))

    def permute(self, mapping: Mapping[int, int] | Sequence[int]) -> "OrientedGraph":
        """Relabel vertices through a bijection on 1..order.

        *mapping* is either a dict {old: new} covering every label, or a
        sequence whose i-th entry is the image of vertex i+1.  Raises
        NotBijective if the mapping is not a bijection on 1..order.
        """
        if isinstance(mapping, Mapping):
            images = {int(k): int(v) for k, v in mapping.items()}
        else:
            images = {i + 1: int(v) for i, v in enumerate(mapping)}
        labels = list(self.vertices())
        if sorted(images) != labels or sorted(images.values()) != labels:
            raise NotBijective(f"mapping is not a bijection on 1..{self.order}")
        return OrientedGraph(self.order, ((images[u], images[v]) for u, v in self.arcs))

    def add_isolated(self, count: int = 1) -> "OrientedGraph":
        """Append *count* isolated vertices labeled order+1..order+count."""
        if count < 0:
            raise OutOfRange(f"count must be nonnegative, got {count}")
        if count == 0:
            return self
        return OrientedGraph(self.order + count, self.arcs)

    # ---- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.order == other.order and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.order, self.arcs))

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices())

    def __repr__(self) -> str:
        return f"OrientedGraph(order={self.order}, arcs={self.arc_count})"


def make_graph(order: int, arc_list: Iterable[tuple[int, int]]) -> OrientedGraph:
    """Build an oriented graph from an arc list.

    Duplicate arcs are silently de-duplicated.  Raises LoopArc, SymmetricPair
    or OutOfRange when the input violates the oriented-graph invariants.
    """
    return OrientedGraph(order, arc_list)
