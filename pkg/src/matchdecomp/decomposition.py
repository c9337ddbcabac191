"""Maximum weight and minimum cover by repeated heaviest-slice peeling.

Each level takes the edges of largest residual weight as a unit-weight
graph, finds a maximum cardinality matching and a König cover of it, adds
the matching size to the running total and the cover into the cumulative
cover D, and lowers the residual weight of every edge at a covered node.
The loop ends when no edge has positive residual; the running total is
mwm(G) and D is a minimum weight cover.

The residual graph is never copied.  One arena of residual weights is kept
with every live edge filed in a bucket keyed by its residual, so the next
slice is always the highest nonempty bucket.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cardinality import LEFT_SEEDED, hopcroft_karp, konig_sets
from .graph import BipartiteGraph, Cover, residual_graph, slice_top


@dataclass(frozen=True)
class LevelStats:
    top: int  # residual weight of the slice
    slice_edges: int
    mm: int
    reduced_edges: int  # live edges whose residual dropped this level


class PeelState:
    """Mutable state of one decomposition run over ``graph``."""

    def __init__(self, graph: BipartiteGraph, convention: str = LEFT_SEEDED):
        self.graph = graph
        self.convention = convention
        edges = graph.edges
        self.ex = [x for x, _, _ in edges]
        self.ey = [y for _, y, _ in edges]
        self.residual = [w for _, _, w in edges]
        self.cover_left = [0] * graph.left_count
        self.cover_right = [0] * graph.right_count
        # dicts double as insertion-ordered sets with O(1) delete
        self.buckets: list[dict[int, None]] = [{} for _ in range(graph.max_weight + 1)]
        for e, w in enumerate(self.residual):
            self.buckets[w][e] = None
        self.top = graph.max_weight
        self.live_left = [list(a) for a in graph.left_adj]
        self.live_right = [list(a) for a in graph.right_adj]
        self.accumulated_mm = 0
        self.level = 0
        self.history: list[LevelStats] = []

    def done(self) -> bool:
        while self.top > 0 and not self.buckets[self.top]:
            self.top -= 1
        return self.top == 0

    def peel_once(self) -> LevelStats:
        """Run one level.  Caller must check :meth:`done` first."""
        top = self.top
        ex, ey = self.ex, self.ey
        slice_ids = sorted(self.buckets[top])
        adj: dict[int, list[int]] = {}
        for e in slice_ids:
            adj.setdefault(ex[e], []).append(ey[e])
        lefts = sorted(adj)
        mate_l, mate_r = hopcroft_karp(lefts, adj)
        cover_l, cover_r = konig_sets(lefts, adj, mate_l, mate_r, self.convention)

        reduced: set[int] = set()
        for x in cover_l:
            self.cover_left[x] += 1
            self.live_left[x] = self._lower(self.live_left[x], reduced)
        for y in cover_r:
            self.cover_right[y] += 1
            self.live_right[y] = self._lower(self.live_right[y], reduced)

        stats = LevelStats(top, len(slice_ids), len(mate_l), len(reduced))
        self.accumulated_mm += len(mate_l)
        self.level += 1
        self.history.append(stats)
        return stats

    def _lower(self, edge_ids: list[int], reduced: set[int]) -> list[int]:
        # Edges already dead (dropped through the other endpoint) are pruned here.
        residual, buckets = self.residual, self.buckets
        keep = []
        for e in edge_ids:
            r = residual[e]
            if r <= 0:
                continue
            del buckets[r][e]
            r -= 1
            residual[e] = r
            reduced.add(e)
            if r > 0:
                buckets[r][e] = None
                keep.append(e)
        return keep

    def run(self) -> PeelState:
        while not self.done():
            self.peel_once()
        return self

    def cover(self) -> Cover:
        return Cover(tuple(self.cover_left), tuple(self.cover_right))

    def check_invariants(self) -> None:
        """Assert the arena, bucket and cover bookkeeping agree."""
        graph = self.graph
        filed = {}
        for r, bucket in enumerate(self.buckets):
            for e in bucket:
                assert e not in filed, f"edge {e} filed twice"
                filed[e] = r
        for e, (x, y, w) in enumerate(graph.edges):
            expected = w - self.cover_left[x] - self.cover_right[y]
            if expected > 0:
                assert self.residual[e] == expected, (e, self.residual[e], expected)
                assert filed.get(e) == expected, (e, filed.get(e), expected)
            else:
                assert e not in filed, f"dead edge {e} still filed"
        assert self.accumulated_mm == sum(s.mm for s in self.history)
        assert self.accumulated_mm == sum(self.cover_left) + sum(self.cover_right)


def run_decomposition(graph: BipartiteGraph, convention: str = LEFT_SEEDED) -> PeelState:
    return PeelState(graph, convention).run()


def compute_mwm(graph: BipartiteGraph) -> int:
    """Weight of a maximum weight matching of ``graph``."""
    return run_decomposition(graph).accumulated_mm


def compute_min_cover(graph: BipartiteGraph, convention: str = LEFT_SEEDED) -> Cover:
    """A minimum weight cover; its weight equals :func:`compute_mwm`."""
    return run_decomposition(graph, convention).cover()


def decompose_check(graph: BipartiteGraph, h: int, convention: str = LEFT_SEEDED) -> tuple[int, int]:
    """``(mwm(G_h), mwm(residual of G under a minimum cover of G_h))``.

    The two numbers always sum to mwm(G), whatever minimum cover of the
    slice is used; ``convention`` selects which one the König step emits.
    """
    sliced = slice_top(graph, h)
    state = run_decomposition(sliced, convention)
    rest = residual_graph(graph, state.cover())
    return state.accumulated_mm, compute_mwm(rest)
