import pytest
from hypothesis import given

from matchdecomp import build_graph
from matchdecomp.errors import (
    DuplicateEdge,
    IndexOutOfRange,
    ParseError,
    TooManyEdges,
    ZeroOrNegativeWeight,
)
from matchdecomp.instances import format_instance, gen_random, parse_instance, parse_instance_with_matching

from _support import complete, g2, graphs

G2_TEXT = "p bmatch 2 2 3\ne 1 1 3\ne 1 2 2\ne 2 1 2"


class TestParse:
    def test_g2(self):
        assert parse_instance(G2_TEXT) == g2()

    def test_comments_and_blank_lines(self):
        text = "c hello\n\np bmatch 2 2 3\n  \ne 1 1 3\nc mid\ne 1 2 2\ne 2 1 2\n"
        assert parse_instance(text) == g2()

    def test_zero_weight(self):
        with pytest.raises(ZeroOrNegativeWeight, match="line 2"):
            parse_instance("p bmatch 1 1 1\ne 1 1 0")

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError) as info:
            parse_instance("p bmatch 2 2 2\ne 1 1 3")
        assert info.value.line == 1

    def test_bad_integer_has_column(self):
        with pytest.raises(ParseError) as info:
            parse_instance("p bmatch 2 2 1\ne 1 x 3")
        assert (info.value.line, info.value.column) == (2, 5)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "e 1 1 1",
            "p bmatch 1 1",
            "p bmatch 1 1 0\np bmatch 1 1 0",
            "p flow 1 1 0",
            "p bmatch 1 1 1\ne 1 1",
            "p bmatch 1 1 1\ne 1 1 2.5",
            "p bmatch 1 1 0\nm 1",
            "p bmatch 1 1 0\nz",
            "p bmatch 1 1 1\ne 1 1 é",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_instance(text)

    def test_duplicate(self):
        with pytest.raises(DuplicateEdge):
            parse_instance("p bmatch 1 1 2\ne 1 1 1\ne 1 1 2")

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            parse_instance("p bmatch 1 1 1\ne 1 2 1")

    def test_matching_lines(self):
        g, pairs = parse_instance_with_matching(G2_TEXT + "\nm 1 2\nm 2 1\n")
        assert g == g2() and pairs == [(0, 1), (1, 0)]
        assert parse_instance_with_matching(G2_TEXT)[1] is None


class TestFormat:
    def test_g2(self):
        assert format_instance(g2()) == G2_TEXT + "\n"

    def test_with_matching_and_comment(self):
        text = format_instance(g2(), [(0, 1)], comments=["note"])
        assert text.splitlines()[0] == "c note" and text.endswith("m 1 2\n")

    @given(graphs(max_side=6, max_weight=50))
    def test_round_trip(self, g):
        assert parse_instance(format_instance(g)) == g


class TestGenRandom:
    def test_exhausts_pairs(self):
        assert gen_random(2, 2, 4, 1, seed=3) == complete(2)

    def test_deterministic(self):
        assert gen_random(10, 10, 30, 5, seed=9) == gen_random(10, 10, 30, 5, seed=9)
        assert gen_random(10, 10, 30, 5, seed=9) != gen_random(10, 10, 30, 5, seed=10)

    def test_structure(self):
        for seed in range(20):
            g = gen_random(10, 10, 30, 5, seed)
            assert g.m == 30 and g.N <= 5
            assert len({(x, y) for x, y, _ in g.edges}) == 30

    def test_too_many_edges(self):
        with pytest.raises(TooManyEdges):
            gen_random(2, 2, 5, 1, seed=0)

    def test_round_trip(self):
        g = gen_random(30, 20, 200, 40, seed=1)
        assert parse_instance(format_instance(g)) == g

    def test_empty_sides(self):
        assert gen_random(0, 5, 0, 3, seed=0) == build_graph(0, 5, [])
