import random

import pytest
from hypothesis import given

from matchdecomp import Cover, build_graph, compute_min_cover, compute_mwm, recover_matching, solve, verify_duality
from matchdecomp.errors import CoverNotOptimal
from matchdecomp.oracle import hungarian_cover, oracle_mwm_exhaustive
from matchdecomp.recovery import build_doubled_graph, recover_with_witness

from _support import g2, graphs, random_graph, single_edge


def assert_certified(g, cover, rec):
    m = rec.matching
    cl, cr = cover.left, cover.right
    for x, y in m.pairs:
        assert cl[x] + cr[y] == g.weight(x, y)
    matched_l, matched_r = m.left_mates(), m.right_mates()
    assert all(x in matched_l for x in range(g.left_count) if cl[x] > 0)
    assert all(y in matched_r for y in range(g.right_count) if cr[y] > 0)
    assert 2 * rec.k_size == rec.doubled.node_count
    assert m.weight == cover.weight


class TestRecoverMatching:
    def test_g2_symmetric_cover(self):
        # x1y1 is not tight (2 + 2 > 3); the other two edges are
        g = g2()
        c = Cover.from_values(g, {0: 2}, {0: 2})
        m = recover_matching(g, c)
        assert m.pairs == ((0, 1), (1, 0)) and m.weight == 4

    def test_g2_peeled_cover(self):
        # all three edges tight; x2 has no bridge so x2y1 is forced
        g = g2()
        c = compute_min_cover(g)
        assert recover_matching(g, c).pairs == ((0, 1), (1, 0))

    def test_single_edge(self):
        g = single_edge(5)
        m = recover_matching(g, Cover.from_values(g, {0: 5}))
        assert m.pairs == ((0, 0),)

    def test_cover_too_heavy(self):
        g = g2()
        with pytest.raises(CoverNotOptimal):
            recover_matching(g, Cover.from_values(g, {0: 3, 1: 2}))

    def test_not_a_cover(self):
        g = g2()
        with pytest.raises(CoverNotOptimal):
            recover_matching(g, Cover.zero(g))

    def test_empty(self):
        g = build_graph(2, 3, [])
        assert len(recover_matching(g, Cover.zero(g))) == 0

    def test_doubled_graph_shape(self):
        g = g2()
        d = build_doubled_graph(g, Cover.from_values(g, {0: 2}, {0: 2}))
        assert d.tight_edges == ((0, 1), (1, 0))
        assert (d.h_left, d.h_right) == ((0, 1), (0, 1))
        assert (d.bridges_left, d.bridges_right) == ((1,), (1,))
        assert d.node_count == 8 and d.edge_count == 6

    @given(graphs())
    def test_certificates_both_conventions(self, g):
        for conv in ("left", "right"):
            c = compute_min_cover(g, conv)
            rec = recover_with_witness(g, c)
            assert_certified(g, c, rec)
            d = rec.doubled
            assert d.node_count <= 2 * g.n
            assert d.edge_count <= 2 * len(d.tight_edges) + g.n

    @given(graphs())
    def test_accepts_foreign_minimum_cover(self, g):
        c = hungarian_cover(g)
        assert_certified(g, c, recover_with_witness(g, c))

    @given(graphs(max_side=4, max_weight=4))
    def test_rejects_every_heavier_cover(self, g):
        c = compute_min_cover(g)
        if g.left_count:
            heavier = c + Cover.from_values(g, {0: 1})
            with pytest.raises(CoverNotOptimal):
                recover_matching(g, heavier)


class TestSolve:
    def test_g2(self):
        sol = solve(g2())
        assert sol.weight == 4
        assert verify_duality(g2(), sol.matching, sol.cover)

    def test_empty(self):
        g = build_graph(0, 0, [])
        sol = solve(g)
        assert sol.weight == 0 and len(sol.matching) == 0 and sol.cover.weight == 0

    def test_random_small_against_exhaustive(self):
        rng = random.Random(2)
        for _ in range(10):
            g = random_graph(rng, 12, 9)
            sol = solve(g)
            assert sol.weight == sol.matching.weight == oracle_mwm_exhaustive(g)

    def test_random_mid_scale(self):
        rng = random.Random(3)
        for _ in range(10):
            g = random_graph(rng, 150, 40, max_edges=1200)
            sol = solve(g)
            assert sol.weight == compute_mwm(g)
            assert verify_duality(g, sol.matching, sol.cover)
