"""Graph serialization: JSON and edge-list parsing, JSON/edge-list/dot output.

JSON form: ``{"order": k, "arcs": [[tail, head], ...]}`` with 1-based labels
and arcs sorted lexicographically on emit, so repeated emits of equal graphs
are byte-identical.

Edge-list form: the first data line is the order, each following line is
``tail head``.  Anything from ``#`` to the end of a line is a comment.
"""
from __future__ import annotations

import json

from .digraph import OrientedGraph

__all__ = ["ParseError", "parse_graph", "emit_graph", "PARSE_FORMATS", "EMIT_FORMATS"]

PARSE_FORMATS = ("json", "edgelist")
EMIT_FORMATS = ("json", "edgelist", "dot")


class ParseError(ValueError):
    """Malformed graph input; carries a line number when one is known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    return data


def _parse_json(text: str) -> OrientedGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at position {exc.pos}: {exc.msg}", exc.lineno) from None
    if not isinstance(payload, dict):
        raise ParseError("top-level JSON value must be an object")
    if "order" not in payload or "arcs" not in payload:
        raise ParseError('JSON object needs "order" and "arcs" keys')
    order = payload["order"]
    arcs = payload["arcs"]
    if not isinstance(order, int) or isinstance(order, bool):
        raise ParseError(f'"order" must be an integer, got {order!r}')
    if not isinstance(arcs, list):
        raise ParseError('"arcs" must be a list of [tail, head] pairs')
    pairs = []
    for pos, arc in enumerate(arcs):
        if (
            not isinstance(arc, (list, tuple))
            or len(arc) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in arc)
        ):
            raise ParseError(f"arc #{pos} must be a pair of integers, got {arc!r}")
        pairs.append((arc[0], arc[1]))
    return OrientedGraph(order, pairs)


def _parse_edgelist(text: str) -> OrientedGraph:
    order: int | None = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if order is None:
            if len(fields) != 1:
                raise ParseError("first data line must contain only the order", lineno)
            try:
                order = int(fields[0])
            except ValueError:
                raise ParseError(f"order must be an integer, got {fields[0]!r}", lineno) from None
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'tail head', got {line!r}", lineno)
        try:
            arcs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(f"arc endpoints must be integers, got {line!r}", lineno) from None
    if order is None:
        raise ParseError("input contains no order line")
    return OrientedGraph(order, arcs)


def parse_graph(data: str | bytes, format: str = "json") -> OrientedGraph:
    """Parse a graph in the declared format ("json" or "edgelist").

    Structural problems raise :class:`ParseError`; violations of the
    oriented-graph invariants propagate as the core construction errors
    (LoopArc, SymmetricPair, OutOfRange).
    """
    text = _as_text(data)
    if format == "json":
        return _parse_json(text)
    if format == "edgelist":
        return _parse_edgelist(text)
    raise ValueError(f"unknown parse format {format!r}; expected one of {PARSE_FORMATS}")


def sniff_format(data: str | bytes) -> str:
    """Guess "json" or "edgelist" from the first non-blank character."""
    text = _as_text(data).lstrip()
    return "json" if text.startswith("{") else "edgelist"


def emit_graph(g: OrientedGraph, format: str = "json") -> str:
    """Serialize a graph; json and edgelist round-trip through parse_graph."""
    if format == "json":
        arcs = [[u, v] for u, v in g.sorted_arcs()]
        return json.dumps({"order": g.order, "arcs": arcs}, separators=(", ", ": "))
    if format == "edgelist":
        lines = [str(g.order)]
        lines += [f"{u} {v}" for u, v in g.sorted_arcs()]
        return "\n".join(lines) + "\n"
    if format == "dot":
        lines = ["digraph oriented {"]
        lines += [f"  {v};" for v in g.vertices()]
        lines += [f"  {u} -> {v};" for u, v in g.sorted_arcs()]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown emit format {format!r}; expected one of {EMIT_FORMATS}")
