"""Instance builders shared by the test modules."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from matchdecomp import build_graph


def g2():
    # X = {x1, x2}, Y = {y1, y2}; edges x1y1:3, x1y2:2, x2y1:2
    return build_graph(2, 2, [(0, 0, 3), (0, 1, 2), (1, 0, 2)])


def single_edge(weight):
    return build_graph(1, 1, [(0, 0, weight)])


def complete(k, weight=1):
    return build_graph(k, k, [(x, y, weight) for x in range(k) for y in range(k)])


def random_graph(rng: random.Random, max_nodes: int, max_weight: int, max_edges: int | None = None):
    """Random shape: side sizes, density and N all drawn per instance."""
    n = rng.randint(0, max_nodes)
    left = rng.randint(0, n)
    right = n - left
    cells = left * right
    limit = cells if max_edges is None else min(cells, max_edges)
    m = rng.randint(0, limit)
    top = rng.randint(1, max_weight)
    picks = rng.sample(range(cells), m)
    return build_graph(left, right, [(k // right, k % right, rng.randint(1, top)) for k in picks])


@st.composite
def graphs(draw, max_side=5, max_weight=6):
    left = draw(st.integers(0, max_side))
    right = draw(st.integers(0, max_side))
    cells = [(x, y) for x in range(left) for y in range(right)]
    chosen = draw(st.sets(st.sampled_from(cells), max_size=len(cells))) if cells else set()
    weights = draw(st.lists(st.integers(1, max_weight), min_size=len(chosen), max_size=len(chosen)))
    return build_graph(left, right, [(x, y, w) for (x, y), w in zip(sorted(chosen), weights)])


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []
