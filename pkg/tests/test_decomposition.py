import random

import pytest
from hypothesis import given, settings

from matchdecomp import (
    build_graph,
    compute_min_cover,
    compute_mwm,
    decompose_check,
    verify_cover,
)
from matchdecomp.decomposition import PeelState, run_decomposition
from matchdecomp.errors import HOutOfRange
from matchdecomp.graph import residual_graph, slice_top
from matchdecomp.oracle import hungarian_cover, oracle_hungarian, oracle_mwm_exhaustive

from _support import g2, graphs, random_graph, single_edge


class TestComputeMwm:
    def test_g2(self):
        assert compute_mwm(g2()) == 4

    def test_empty(self):
        assert compute_mwm(build_graph(0, 0, [])) == 0
        assert compute_mwm(build_graph(3, 3, [])) == 0

    def test_single_edge(self):
        assert compute_mwm(single_edge(5)) == 5

    def test_g2_levels(self):
        # slices: {x1y1}; then {x1y1, x2y1}; then all three at residual 1
        st = run_decomposition(g2())
        assert [(s.top, s.slice_edges, s.mm) for s in st.history] == [(3, 1, 1), (2, 2, 1), (1, 3, 2)]

    @given(graphs())
    def test_matches_exhaustive(self, g):
        assert compute_mwm(g) == oracle_mwm_exhaustive(g)

    def test_matches_hungarian_mid_scale(self):
        rng = random.Random(5)
        for _ in range(15):
            g = random_graph(rng, 120, 30, max_edges=800)
            assert compute_mwm(g) == oracle_hungarian(g)[1]


class TestComputeMinCover:
    def test_g2_left_seeded(self):
        # level covers: {x1}, {y1}, {x1, x2}
        c = compute_min_cover(g2())
        assert (c.left, c.right) == ((2, 1), (1, 0))

    def test_g2_right_seeded(self):
        # level covers: {y1}, {x1}, {y1, y2}
        c = compute_min_cover(g2(), "right")
        assert (c.left, c.right) == ((1, 0), (2, 1))

    def test_empty(self):
        g = build_graph(2, 1, [])
        assert compute_min_cover(g).weight == 0

    def test_single_edge(self):
        c = compute_min_cover(single_edge(5))
        assert (c.left, c.right) == ((5,), (0,))

    @given(graphs())
    def test_is_minimum(self, g):
        for conv in ("left", "right"):
            c = compute_min_cover(g, conv)
            assert verify_cover(g, c)
            assert c.weight == compute_mwm(g)


class TestDecomposeCheck:
    def test_g2_h1(self):
        assert decompose_check(g2(), 1) == (1, 3)

    def test_g2_h_max(self):
        assert decompose_check(g2(), 3) == (4, 0)

    def test_single_edge_h2(self):
        assert decompose_check(single_edge(5), 2) == (2, 3)

    def test_out_of_range(self):
        with pytest.raises(HOutOfRange):
            decompose_check(g2(), 4)

    @settings(max_examples=60)
    @given(graphs())
    def test_identity_for_every_h_and_cover(self, g):
        total = oracle_mwm_exhaustive(g)
        for h in range(1, g.N + 1):
            for conv in ("left", "right"):
                assert sum(decompose_check(g, h, conv)) == total
            # a minimum cover of the slice from an unrelated solver
            sliced = slice_top(g, h)
            rest = residual_graph(g, hungarian_cover(sliced))
            assert compute_mwm(sliced) + compute_mwm(rest) == total


class TestPeelState:
    @given(graphs(max_side=6, max_weight=8))
    def test_invariants_every_level(self, g):
        st = PeelState(g)
        st.check_invariants()
        previous_total = g.W
        while not st.done():
            stats = st.peel_once()
            st.check_invariants()
            total = sum(r for r in st.residual if r > 0)
            assert stats.reduced_edges >= 1
            assert total <= previous_total - stats.reduced_edges
            previous_total = total
        assert st.level <= g.N
        assert [s.top for s in st.history] == sorted({s.top for s in st.history}, reverse=True)

    def test_top_pointer_slides_over_hollow_buckets(self):
        # after the first level both weight-9 edges drop to 8 and 7 stays
        g = build_graph(2, 2, [(0, 0, 9), (1, 1, 9), (0, 1, 2)])
        st = run_decomposition(g)
        assert st.accumulated_mm == 18
        assert st.level <= g.N
