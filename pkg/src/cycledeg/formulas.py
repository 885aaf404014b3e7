"""Closed-form degree predictions for the parametric families.

These formulas are the analytic counterpart of the brute-force census in
:mod:`cycledeg.census`: for every family graph they predict the per-vertex
cycle degree directly from the parameters, and the two routes are required
to agree entry for entry.  All arithmetic is exact integer arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .families import BadParameters

__all__ = [
    "binom",
    "PredictedProfile",
    "family_a_profile",
    "family_b_profile",
    "family_d4m2_profile",
    "family_d4m4_profile",
    "a_irregularity_criterion",
    "max_triangle_degree_bound",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient extended to all integers: 0 unless n >= k >= 0."""
    if 0 <= k <= n:
        return math.comb(n, k)
    return 0


@dataclass(frozen=True)
class PredictedProfile:
    """Per-vertex degrees predicted by a family's closed form.

    ``degrees[i]`` is the prediction for vertex ``i + 1``, matching the
    layout of :class:`cycledeg.census.DegreeProfile`.
    """

    family: str
    cycle_length: int
    params: dict[str, int] = field(compare=False)
    degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(d < 0 for d in self.degrees):
            raise ValueError("predicted degrees must be nonnegative")

    @property
    def order(self) -> int:
        return len(self.degrees)

    def degree_of(self, v: int) -> int:
        return self.degrees[v - 1]

    def is_distinct(self) -> bool:
        return len(set(self.degrees)) == len(self.degrees)


def _exact_half(value: int) -> int:
    half, rem = divmod(value, 2)
    assert rem == 0, f"{value} is not even; formula transcription error"
    return half


def family_a_profile(l: int, n: int) -> PredictedProfile:
    """Predicted length-n cycle degrees of gen_a(l, n), vertex by vertex."""
    if not l >= n >= 5:
        raise BadParameters(f"family A profile needs l >= n >= 5, got l={l}, n={n}")
    free4 = binom(l - 2, n - 4)   # completions of a cycle with four pinned vertices
    free3 = binom(l - 1, n - 3)   # completions with three pinned vertices
    degrees: list[int] = []
    degrees += [i * free4 for i in range(1, l)]
    degrees.append(l * free3)
    degrees += [(2 * l - i) * free4 + free3 + 1 for i in range(l + 1, l + n - 1)]
    degrees += [(2 * l - i) * free4 + free3 for i in range(l + n - 1, 2 * l + 1)]
    degrees.append(l * free3 + 1)
    degrees.append(1)
    return PredictedProfile("A", n, {"l": l, "n": n}, tuple(degrees))


def family_b_profile(l: int) -> PredictedProfile:
    """Predicted quadrangle degrees of gen_b2l2(l), vertex by vertex."""
    if l < 5:
        raise BadParameters(f"family B2L2 profile needs l >= 5, got l={l}")
    degrees: list[int] = []
    degrees += list(range(1, l))
    degrees.append(l * l)
    degrees += [4 * l - i - 1 for i in range(l + 1, 2 * l + 1)]
    degrees.append(_exact_half(l * (3 * l - 1)))
    degrees.append(_exact_half(l * (l + 1)))
    return PredictedProfile("B2L2", 4, {"l": l}, tuple(degrees))


def family_d4m2_profile(m: int) -> PredictedProfile:
    """Predicted triangle degrees of gen_d4m2(m), vertex by vertex."""
    if m < 3:
        raise BadParameters(f"family D4M2 profile needs m >= 3, got m={m}")
    degrees: list[int] = []
    degrees += [m + i for i in range(1, m + 1)]
    degrees += [2 * m + i for i in range(m + 1, 2 * m + 1)]
    degrees += [5 * m - i + 1 for i in range(2 * m + 1, 3 * m + 1)]
    degrees += [4 * m - i + 1 for i in range(3 * m + 1, 4 * m + 1)]
    degrees.append(2 * m * m + m)
    degrees.append(2 * m * m)
    return PredictedProfile("D4M2", 3, {"m": m}, tuple(degrees))


def family_d4m4_profile(m: int) -> PredictedProfile:
    """Predicted triangle degrees of gen_d4m4(m).

    Computed as increments over :func:`family_d4m2_profile`: the extension
    adds one short cycle through 2m-2 and 2m-1, and 4m-1 triangles through
    2m and the feeder vertex 4m+3.
    """
    if m < 3:
        raise BadParameters(f"family D4M4 profile needs m >= 3, got m={m}")
    base = list(family_d4m2_profile(m).degrees)
    degrees = list(base)
    for i in range(1, 4 * m + 1):
        degrees[i - 1] += 1
    for i in (2 * m - 2, 2 * m - 1):
        degrees[i - 1] += 1
    degrees[2 * m - 1] = base[2 * m - 1] + 4 * m - 1
    degrees.append(4 * m - 1)
    degrees.append(1)
    return PredictedProfile("D4M4", 3, {"m": m}, tuple(degrees))


def a_irregularity_criterion(l: int, n: int) -> bool:
    """Divisibility test guaranteeing pairwise-distinct A-family degrees.

    True exactly when l - 1 is not divisible by n - 3; in that case the
    degrees of family_a_profile(l, n) are pairwise distinct.
    """
    if not l >= n >= 5:
        raise BadParameters(f"criterion needs l >= n >= 5, got l={l}, n={n}")
    return (l - 1) % (n - 3) != 0


def max_triangle_degree_bound(k: int) -> int:
    """Largest possible triangle degree of any vertex in an order-k graph.

    Equals floor((k-1)^2 / 4): a vertex's triangle degree is at most the
    product of its out- and in-degree, whose sum is at most k - 1.
    """
    if k < 1:
        raise ValueError(f"order must be positive, got {k}")
    return (k - 1) ** 2 // 4
