"""Generators for the graph families with provably irregular cycle degrees.

Each generator translates its defining arc set clause by clause, one code
path per clause, with no algebraic shortcuts: being auditable against the
definitions matters more here than construction speed.  Throughout, a range
of consecutive labels {a, ..., b} is treated as empty when a > b.

Families and parameter domains:

==========  ===========  =====================================
family      order        parameters
==========  ===========  =====================================
A           2l+2         l >= n >= 5 (n is the target cycle length)
B7 B8 B10   7, 8, 10     none (fixed quadrangle-irregular graphs)
B2L2        2l+2         l >= 5
D10 D12     10, 12       none (fixed triangle-irregular graphs)
D4M2        4m+2         m >= 3
D4M4        4m+4         m >= 3
==========  ===========  =====================================
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .digraph import OrientedGraph

__all__ = [
    "BadParameters",
    "FamilySpec",
    "FAMILIES",
    "build",
    "gen_a",
    "gen_b7",
    "gen_b8",
    "gen_b10",
    "gen_b2l2",
    "gen_d10",
    "gen_d12",
    "gen_d4m2",
    "gen_d4m4",
]


class BadParameters(ValueError):
    """Family parameters outside their admissible domain."""


# ---------------------------------------------------------------------------
# Parametric families
# ---------------------------------------------------------------------------

def gen_a(l: int, n: int) -> OrientedGraph:
    """Order-(2l+2) graph whose length-n cycle degrees follow a closed form.

    Two ascending tournaments sit on V1 = {1..l} and V2 = {l+1..2l}; vertex
    2l+1 feeds every V2 vertex, V2 vertices drop back onto V1 under the
    reach condition i - j <= l, and vertex 2l+2 hangs off the single arc
    pair (l+n-2, 2l+2), (2l+2, 2l+1).
    """
    if not l >= n >= 5:
        raise BadParameters(f"gen_a needs l >= n >= 5, got l={l}, n={n}")
    v1 = range(1, l + 1)
    v2 = range(l + 1, 2 * l + 1)
    arcs: list[tuple[int, int]] = []
    arcs += [(i, j) for i in v1 for j in v1 if i < j]
    arcs += [(i, j) for i in v2 for j in v2 if i < j]
    arcs += [(2 * l + 1, i) for i in v2]
    arcs += [(i, j) for i in v2 for j in v1 if i - j <= l]
    arcs += [(l, 2 * l + 1), (l + n - 2, 2 * l + 2), (2 * l + 2, 2 * l + 1)]
    return OrientedGraph(2 * l + 2, arcs)


def gen_b2l2(l: int) -> OrientedGraph:
    """Order-(2l+2) graph that is quadrangle-irregular for every l >= 5."""
    if l < 5:
        raise BadParameters(f"gen_b2l2 needs l >= 5, got l={l}")
    v1 = range(1, l + 1)
    v2 = range(l + 1, 2 * l + 1)
    arcs: list[tuple[int, int]] = []
    arcs += [(i, j) for i in v1 for j in v1 if i < j]
    arcs += [(i, j) for i in v2 for j in v2 if i < j]
    arcs += [(2 * l + 1, i) for i in v2]
    arcs += [(i, 2 * l + 2) for i in v2]
    arcs += [(i, j) for i in v2 for j in v1 if i - j <= l]
    arcs += [(l, 2 * l + 1), (2 * l + 2, l), (2 * l + 2, 2 * l + 1)]
    return OrientedGraph(2 * l + 2, arcs)


def gen_d4m2(m: int) -> OrientedGraph:
    """Order-(4m+2) graph that is triangle-irregular for every m >= 3."""
    if m < 3:
        raise BadParameters(f"gen_d4m2 needs m >= 3, got m={m}")
    v1 = range(1, m + 1)
    v2 = range(m + 1, 2 * m + 1)
    v3 = range(2 * m + 1, 3 * m + 1)
    v4 = range(3 * m + 1, 4 * m + 1)
    v12 = list(v1) + list(v2)
    v34 = list(v3) + list(v4)
    arcs: list[tuple[int, int]] = []
    arcs += [(i, j) for i in v1 for j in v2]
    arcs += [(i, j) for i in v34 for j in v12 if i - j <= 2 * m]
    arcs += [(i, 4 * m + 1) for i in v12]
    arcs += [(4 * m + 1, i) for i in v34]
    arcs += [(i, 4 * m + 2) for i in v2]
    arcs += [(4 * m + 2, i) for i in list(v1) + list(v3)]
    return OrientedGraph(4 * m + 2, arcs)


def gen_d4m4(m: int) -> OrientedGraph:
    """Order-(4m+4) extension of gen_d4m2(m), also triangle-irregular.

    Adds a feeder vertex 4m+3 adjacent to almost everything through 2m, and
    a pendant vertex 4m+4 on the short cycle (2m-2, 2m-1, 4m+4).
    """
    if m < 3:
        raise BadParameters(f"gen_d4m4 needs m >= 3, got m={m}")
    base = gen_d4m2(m)
    v2 = range(m + 1, 2 * m + 1)
    arcs: list[tuple[int, int]] = list(base.arcs)
    arcs += [(i, 2 * m) for i in v2 if i != 2 * m]
    arcs += [(4 * m + 3, i) for i in range(1, 4 * m + 1) if i != 2 * m]
    arcs += [(2 * m, 4 * m + 3)]
    arcs += [(2 * m - 2, 2 * m - 1), (2 * m - 1, 4 * m + 4), (4 * m + 4, 2 * m - 2)]
    return OrientedGraph(4 * m + 4, arcs)


# ---------------------------------------------------------------------------
# Fixed graphs (explicit arc lists)
# ---------------------------------------------------------------------------

_B7_ARCS = [
    (1, 6), (2, 6), (3, 7), (4, 2), (4, 3), (4, 6),
    (5, 1), (5, 2), (5, 3), (5, 4), (5, 6), (6, 3),
    (6, 7), (7, 4), (7, 5),
]

_B8_ARCS = [
    (1, 2), (1, 3), (2, 3), (3, 7), (3, 8),
    (4, 1), (4, 2), (4, 3), (4, 5), (4, 6), (4, 8),
    (5, 2), (5, 3), (5, 6), (5, 8), (6, 3), (6, 8),
    (7, 2), (7, 4), (7, 5), (7, 6), (8, 1), (8, 7),
]

_B10_ARCS = [
    (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (3, 10),
    (4, 9), (5, 1), (5, 2), (5, 3), (5, 4), (5, 6), (5, 7), (5, 8), (5, 10),
    (6, 2), (6, 3), (6, 4), (6, 7), (6, 8), (6, 10),
    (7, 3), (7, 4), (7, 8), (7, 10), (8, 4), (8, 10),
    (9, 5), (9, 6), (9, 7), (9, 8), (10, 4), (10, 9),
]

_D10_ARCS = [
    (1, 3), (1, 4), (1, 9), (2, 3), (2, 4), (2, 9), (3, 8), (3, 9),
    (3, 10), (4, 3), (4, 9), (4, 10), (5, 1), (5, 2), (5, 3), (5, 4), (5, 6),
    (6, 2), (6, 3), (6, 4), (6, 7), (7, 3), (7, 4), (7, 5), (8, 4),
    (9, 5), (9, 6), (9, 7), (9, 8), (9, 10), (10, 1), (10, 2), (10, 5), (10, 6),
]

_D12_ARCS = [
    (1, 3), (1, 4), (1, 9), (2, 3), (2, 4), (2, 9), (3, 4), (3, 9), (3, 10), (4, 9),
    (4, 10), (4, 12), (5, 1), (5, 2), (5, 3), (5, 4), (6, 2), (6, 3), (6, 4),
    (7, 3), (7, 4), (8, 4), (9, 5), (9, 6), (9, 7), (9, 8), (9, 11),
    (10, 1), (10, 2), (10, 5), (10, 6), (10, 9), (10, 12), (11, 10),
    (12, 1), (12, 2), (12, 3), (12, 5), (12, 6), (12, 7), (12, 8),
]


def gen_b7() -> OrientedGraph:
    """The order-7 quadrangle-irregular graph (15 arcs)."""
    return OrientedGraph(7, _B7_ARCS)


def gen_b8() -> OrientedGraph:
    """The order-8 quadrangle-irregular graph (23 arcs)."""
    return OrientedGraph(8, _B8_ARCS)


def gen_b10() -> OrientedGraph:
    """The order-10 quadrangle-irregular graph (34 arcs)."""
    return OrientedGraph(10, _B10_ARCS)


def gen_d10() -> OrientedGraph:
    """The order-10 triangle-irregular graph (34 arcs)."""
    return OrientedGraph(10, _D10_ARCS)


def gen_d12() -> OrientedGraph:
    """The order-12 triangle-irregular graph (41 arcs)."""
    return OrientedGraph(12, _D12_ARCS)


# ---------------------------------------------------------------------------
# Family specs and dispatch
# ---------------------------------------------------------------------------

_FIXED = ("B7", "B8", "B10", "D10", "D12")
_PARAMS: dict[str, tuple[str, ...]] = {
    "A": ("l", "n"),
    "B2L2": ("l",),
    "D4M2": ("m",),
    "D4M4": ("m",),
}
FAMILIES: tuple[str, ...] = ("A",) + _FIXED[:3] + ("B2L2",) + _FIXED[3:] + ("D4M2", "D4M4")

_SPEC_RE = re.compile(r"^(?P<family>[A-Za-z0-9]+)(?::(?P<params>.*))?$")


@dataclass(frozen=True)
class FamilySpec:
    """Identifier plus parameters selecting one family graph.

    Canonical text form: ``"B7"``, ``"A:l=6,n=5"``, ``"D4M2:m=4"``.
    """

    family: str
    l: int | None = None
    n: int | None = None
    m: int | None = None

    def __post_init__(self) -> None:
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise BadParameters(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        wanted = _PARAMS.get(fam, ())
        for name in ("l", "n", "m"):
            value = getattr(self, name)
            if name in wanted and value is None:
                raise BadParameters(f"family {fam} requires parameter {name}")
            if name not in wanted and value is not None:
                raise BadParameters(f"family {fam} takes no parameter {name}")
        # Domain checks mirror the generators so bad specs fail eagerly.
        if fam == "A" and not (self.l >= self.n >= 5):
            raise BadParameters(f"family A needs l >= n >= 5, got l={self.l}, n={self.n}")
        if fam == "B2L2" and self.l < 5:
            raise BadParameters(f"family B2L2 needs l >= 5, got l={self.l}")
        if fam in ("D4M2", "D4M4") and self.m < 3:
            raise BadParameters(f"family {fam} needs m >= 3, got m={self.m}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse the canonical text form, e.g. ``"A:l=6,n=5"``."""
        match = _SPEC_RE.match(text.strip())
        if match is None:
            raise BadParameters(f"cannot parse family spec {text!r}")
        kwargs: dict[str, int] = {}
        params = match.group("params")
        if params:
            for item in params.split(","):
                if "=" not in item:
                    raise BadParameters(f"bad parameter {item!r} in {text!r}")
                name, _, value = item.partition("=")
                name = name.strip().lower()
                if name not in ("l", "n", "m"):
                    raise BadParameters(f"unknown parameter {name!r} in {text!r}")
                try:
                    kwargs[name] = int(value)
                except ValueError:
                    raise BadParameters(f"parameter {name!r} needs an integer, got {value!r}") from None
        return cls(match.group("family"), **kwargs)

    def __str__(self) -> str:
        parts = [f"{name}={getattr(self, name)}" for name in _PARAMS.get(self.family, ())]
        return self.family if not parts else f"{self.family}:{','.join(parts)}"


def build(spec: FamilySpec | str) -> OrientedGraph:
    """Build the graph selected by a FamilySpec (or its text form)."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    fam = spec.family
    if fam == "A":
        return gen_a(spec.l, spec.n)
    if fam == "B7":
        return gen_b7()
    if fam == "B8":
        return gen_b8()
    if fam == "B10":
        return gen_b10()
    if fam == "B2L2":
        return gen_b2l2(spec.l)
    if fam == "D10":
        return gen_d10()
    if fam == "D12":
        return gen_d12()
    if fam == "D4M2":
        return gen_d4m2(spec.m)
    if fam == "D4M4":
        return gen_d4m4(spec.m)
    raise BadParameters(f"unknown family {fam!r}")
