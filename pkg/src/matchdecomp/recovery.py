"""Turn a minimum weight cover into a maximum weight matching.

H is the subgraph of tight edges, w(u, v) = D(u) + D(v).  Two copies of H
are joined by a bridge u^a u^b at every node of H with D(u) = 0, and a
perfect matching of the doubled graph restricted to copy ``a`` is a
maximum weight matching of G.

The doubled graph is bipartite under the split (X^a + Y^b | Y^a + X^b):
copy-a edges run X^a -> Y^a, copy-b edges Y^b -> X^b, and a bridge joins
x^a -> x^b or y^b -> y^a.  That lets the ordinary Hopcroft-Karp routine
solve it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .cardinality import hopcroft_karp
from .decomposition import run_decomposition
from .errors import CoverNotOptimal
from .graph import BipartiteGraph, Cover, Matching, verify_cover


@dataclass(frozen=True)
class DoubledGraph:
    """H^ab in the bipartition above.

    Left ids: ``x`` for x^a, ``left_count + y`` for y^b.
    Right ids: ``y`` for y^a, ``right_count + x`` for x^b.
    """

    left_count: int
    right_count: int
    tight_edges: tuple[tuple[int, int], ...]
    h_left: tuple[int, ...]  # X nodes of H
    h_right: tuple[int, ...]  # Y nodes of H
    bridges_left: tuple[int, ...]  # x in H with D(x) = 0
    bridges_right: tuple[int, ...]  # y in H with D(y) = 0

    @property
    def node_count(self) -> int:
        return 2 * (len(self.h_left) + len(self.h_right))

    @property
    def edge_count(self) -> int:
        return 2 * len(self.tight_edges) + len(self.bridges_left) + len(self.bridges_right)

    def adjacency(self) -> tuple[list[int], dict[int, list[int]]]:
        lc, rc = self.left_count, self.right_count
        adj: dict[int, list[int]] = {}
        for x in self.h_left:
            adj[x] = []
        for y in self.h_right:
            adj[lc + y] = []
        for x, y in self.tight_edges:
            adj[x].append(y)  # x^a - y^a
            adj[lc + y].append(rc + x)  # y^b - x^b
        for x in self.bridges_left:
            adj[x].append(rc + x)
        for y in self.bridges_right:
            adj[lc + y].append(y)
        return sorted(adj), adj


def build_doubled_graph(graph: BipartiteGraph, cover: Cover) -> DoubledGraph:
    cl, cr = cover.left, cover.right
    tight = tuple((x, y) for x, y, w in graph.edges if cl[x] + cr[y] == w)
    h_left = tuple(sorted({x for x, _ in tight}))
    h_right = tuple(sorted({y for _, y in tight}))
    return DoubledGraph(
        graph.left_count,
        graph.right_count,
        tight,
        h_left,
        h_right,
        tuple(x for x in h_left if cl[x] == 0),
        tuple(y for y in h_right if cr[y] == 0),
    )


class Recovery(NamedTuple):
    matching: Matching
    doubled: DoubledGraph
    k_size: int  # size of the cardinality matching found on the doubled graph


def recover_with_witness(graph: BipartiteGraph, cover: Cover) -> Recovery:
    """:func:`recover_matching` plus the doubled graph and the size of K."""
    if not cover.fits(graph) or not verify_cover(graph, cover):
        raise CoverNotOptimal("supplied labels do not dominate every edge")
    doubled = build_doubled_graph(graph, cover)
    lefts, adj = doubled.adjacency()
    mate_l, _ = hopcroft_karp(lefts, adj)
    if 2 * len(mate_l) != doubled.node_count:
        raise CoverNotOptimal(
            f"doubled tight graph has no perfect matching ({len(mate_l)} of {doubled.node_count // 2})"
        )
    rc = graph.right_count
    pairs = [(x, mate_l[x]) for x in doubled.h_left if mate_l[x] < rc]
    matching = Matching.of(graph, pairs)
    if matching.weight != cover.weight:
        raise CoverNotOptimal(f"matching weight {matching.weight} != cover weight {cover.weight}")
    return Recovery(matching, doubled, len(mate_l))


def recover_matching(graph: BipartiteGraph, cover: Cover) -> Matching:
    """Maximum weight matching from a minimum weight cover.

    Raises CoverNotOptimal when ``cover`` is not a cover, when the doubled
    graph has no perfect matching, or when the result's weight differs
    from the cover's; each of these means ``cover`` was not minimum.
    """
    return recover_with_witness(graph, cover).matching


class Solution(NamedTuple):
    matching: Matching
    cover: Cover
    weight: int


def solve(graph: BipartiteGraph) -> Solution:
    """Minimum cover by peeling, then the matching it certifies."""
    state = run_decomposition(graph)
    cover = state.cover()
    matching = recover_matching(graph, cover)
    return Solution(matching, cover, state.accumulated_mm)
