from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycledeg.census import (
    CycleLengthTooSmall,
    CycleWitness,
    DegreeProfile,
    degree_profile,
    enumerate_cycles,
    is_irregular,
)
from cycledeg.digraph import make_graph
from cycledeg.families import gen_b7, gen_b8, gen_b10, gen_d10, gen_d12

from conftest import oriented_graphs, random_graph

TRIANGLE = make_graph(3, [(1, 2), (2, 3), (3, 1)])

# The seven quadrangles of the order-7 fixed graph, in enumeration order.
B7_QUADRANGLES = [
    (1, 6, 7, 5),
    (2, 6, 7, 4),
    (2, 6, 7, 5),
    (3, 7, 4, 6),
    (3, 7, 5, 4),
    (3, 7, 5, 6),
    (4, 6, 7, 5),
]


class TestCycleWitness:
    def test_valid(self):
        w = CycleWitness((1, 6, 7, 5))
        assert w.length == 4
        assert w.arcs() == [(1, 6), (6, 7), (7, 5), (5, 1)]
        assert w.spans(gen_b7())

    def test_rejects_short(self):
        with pytest.raises(CycleLengthTooSmall):
            CycleWitness((1, 2))

    def test_rejects_repeats(self):
        with pytest.raises(ValueError):
            CycleWitness((1, 2, 1))

    def test_rejects_noncanonical_rotation(self):
        with pytest.raises(ValueError):
            CycleWitness((6, 7, 5, 1))


class TestDegreeProfile:
    def test_conservation_enforced(self):
        with pytest.raises(ValueError):
            DegreeProfile(3, (1, 1, 1), 2)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            DegreeProfile(3, (-1, 2, 2), 1)

    def test_degree_of_is_one_based(self):
        p = degree_profile(gen_b7(), 4)
        assert p.degree_of(1) == 1
        assert p.degree_of(7) == 7
        with pytest.raises(IndexError):
            p.degree_of(8)


class TestEnumerateCycles:
    def test_triangle(self):
        ws = enumerate_cycles(TRIANGLE, 3)
        assert [w.vertices for w in ws] == [(1, 2, 3)]

    def test_longer_than_order_is_empty(self):
        assert enumerate_cycles(TRIANGLE, 4) == []

    def test_too_small_length(self):
        with pytest.raises(CycleLengthTooSmall):
            enumerate_cycles(TRIANGLE, 2)

    def test_b7_quadrangles_exactly(self):
        ws = enumerate_cycles(gen_b7(), 4)
        assert [w.vertices for w in ws] == B7_QUADRANGLES

    def test_d12_triangles(self):
        ws = enumerate_cycles(gen_d12(), 3)
        assert len(ws) == 27
        seqs = {w.vertices for w in ws}
        assert (9, 11, 10) in seqs
        assert (1, 3, 10) in seqs

    def test_output_sorted_and_unique(self):
        ws = enumerate_cycles(gen_b10(), 4)
        seqs = [w.vertices for w in ws]
        assert seqs == sorted(seqs)
        assert len(set(seqs)) == len(seqs)
        # no two witnesses are rotations of one another
        by_set: dict[tuple, list] = {}
        for s in seqs:
            by_set.setdefault(tuple(sorted(s)), []).append(s)
        for members in by_set.values():
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    rotations = {a[r:] + a[:r] for r in range(len(a))}
                    assert b not in rotations

    def test_parallel_matches_serial(self):
        serial = enumerate_cycles(gen_b10(), 4, jobs=1)
        parallel = enumerate_cycles(gen_b10(), 4, jobs=2)
        assert serial == parallel


class TestDegreeProfileValues:
    def test_b7_table(self):
        p = degree_profile(gen_b7(), 4)
        assert p.degrees == (1, 2, 3, 4, 5, 6, 7)
        assert p.total_cycles == 7

    def test_b8_table(self):
        p = degree_profile(gen_b8(), 4)
        assert p.degrees == (2, 4, 11, 7, 6, 5, 13, 8)
        assert p.total_cycles == 14

    def test_d10_table(self):
        p = degree_profile(gen_d10(), 3)
        assert p.degrees == (4, 5, 8, 9, 7, 6, 3, 2, 12, 10)
        assert p.total_cycles == 22

    def test_parallel_matches_serial(self):
        assert degree_profile(gen_d12(), 3, jobs=2) == degree_profile(gen_d12(), 3)

    def test_isolated_vertex_has_zero_degree(self):
        p = degree_profile(gen_b8().add_isolated(1), 4)
        assert p.degree_of(9) == 0
        assert p.degrees[:8] == degree_profile(gen_b8(), 4).degrees


class TestIsIrregular:
    def test_b7_true(self):
        assert is_irregular(gen_b7(), 4)

    def test_triangle_false(self):
        assert not is_irregular(TRIANGLE, 3)

    def test_d12_true(self):
        assert is_irregular(gen_d12(), 3)


@settings(max_examples=40)
@given(oriented_graphs(min_order=3, max_order=7), st.integers(3, 5))
def test_witness_list_sorted_and_canonical(g, n):
    seqs = [w.vertices for w in enumerate_cycles(g, n)]
    assert seqs == sorted(seqs)
    assert all(s[0] == min(s) for s in seqs)


@settings(max_examples=60)
@given(oriented_graphs(min_order=3, max_order=7), st.integers(3, 5))
def test_conservation(g, n):
    p = degree_profile(g, n)
    assert sum(p.degrees) == n * p.total_cycles


@settings(max_examples=60)
@given(oriented_graphs(min_order=3, max_order=7), st.integers(3, 5))
def test_reversal_invariance(g, n):
    assert degree_profile(g.reverse(), n).degrees == degree_profile(g, n).degrees


@settings(max_examples=60)
@given(oriented_graphs(min_order=3, max_order=7), st.integers(3, 5), st.randoms(use_true_random=False))
def test_relabeling_equivariance(g, n, rng):
    labels = list(g.vertices())
    images = labels[:]
    rng.shuffle(images)
    mapping = dict(zip(labels, images))
    before = degree_profile(g, n)
    after = degree_profile(g.permute(mapping), n)
    for v in labels:
        assert after.degree_of(mapping[v]) == before.degree_of(v)


@settings(max_examples=60)
@given(oriented_graphs(min_order=3, max_order=7), st.integers(3, 5), st.randoms(use_true_random=False))
def test_arc_removal_monotonicity(g, n, rng):
    if not g.arcs:
        return
    arc = rng.choice(sorted(g.arcs))
    smaller = make_graph(g.order, g.arcs - {arc})
    before = degree_profile(g, n)
    after = degree_profile(smaller, n)
    assert all(a <= b for a, b in zip(after.degrees, before.degrees))


def test_thousand_random_graphs_smoke():
    rng = random.Random(1729)
    for _ in range(200):
        g = random_graph(rng, rng.randint(3, 7))
        n = rng.randint(3, 5)
        p = degree_profile(g, n)
        assert sum(p.degrees) == n * p.total_cycles
