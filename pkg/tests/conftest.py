from __future__ import annotations

import random

from hypothesis import strategies as st

from cycledeg.search import graph_count, graph_from_index


def random_graph(rng: random.Random, order: int):
    """Uniform labeled oriented graph of the given order."""
    return graph_from_index(order, rng.randrange(graph_count(order)))


def oriented_graphs(min_order: int = 1, max_order: int = 7):
    """Hypothesis strategy drawing uniform labeled oriented graphs."""
    return st.integers(min_order, max_order).flatmap(
        lambda k: st.integers(0, graph_count(k) - 1).map(
            lambda index: graph_from_index(k, index)
        )
    )
