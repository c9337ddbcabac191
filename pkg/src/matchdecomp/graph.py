"""Weighted bipartite graphs, matchings and covers.

Nodes live in two index spaces, ``0..left_count-1`` for X and
``0..right_count-1`` for Y.  Derived graphs (heaviest slices, residual
graphs, node deletions) keep both index spaces unchanged and only drop or
reweight edges, so covers computed on a derived graph can be added to covers
of the parent node by node.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    DuplicateEdge,
    HOutOfRange,
    IndexOutOfRange,
    InfeasibleInput,
    InternalInconsistency,
    NotAMatching,
    ZeroOrNegativeWeight,
)


class Side(enum.Enum):
    LEFT = "x"
    RIGHT = "y"


class NodeId(NamedTuple):
    side: Side
    index: int

    def label(self) -> str:
        """1-based display label such as ``x1`` or ``y3``."""
        return f"{self.side.value}{self.index + 1}"

    @classmethod
    def parse(cls, label: str) -> NodeId:
        side = Side(label[0])
        index = int(label[1:]) - 1
        if index < 0:
            raise ValueError(f"bad node label {label!r}")
        return cls(side, index)


Edge = tuple[int, int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    """Integer-weighted bipartite graph G = (X, Y, E).

    Use :func:`build_graph` rather than calling the constructor with
    unvalidated data; the constructor validates anyway.
    """

    left_count: int
    right_count: int
    edges: tuple[Edge, ...]
    left_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    right_adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    max_weight: int = field(init=False, repr=False, compare=False)
    total_weight: int = field(init=False, repr=False, compare=False)
    _index: dict[tuple[int, int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.left_count < 0 or self.right_count < 0:
            raise IndexOutOfRange("node counts must be nonnegative")
        left: list[list[int]] = [[] for _ in range(self.left_count)]
        right: list[list[int]] = [[] for _ in range(self.right_count)]
        index: dict[tuple[int, int], int] = {}
        top = 0
        total = 0
        for e, (x, y, w) in enumerate(self.edges):
            if not (0 <= x < self.left_count and 0 <= y < self.right_count):
                raise IndexOutOfRange(f"edge ({x}, {y}) outside {self.left_count}x{self.right_count}")
            if w < 1:
                raise ZeroOrNegativeWeight(f"edge ({x}, {y}) has weight {w}")
            if (x, y) in index:
                raise DuplicateEdge(f"edge ({x}, {y}) appears more than once")
            index[x, y] = e
            left[x].append(e)
            right[y].append(e)
            if w > top:
                top = w
            total += w
        object.__setattr__(self, "left_adj", tuple(map(tuple, left)))
        object.__setattr__(self, "right_adj", tuple(map(tuple, right)))
        object.__setattr__(self, "max_weight", top)
        object.__setattr__(self, "total_weight", total)
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return self.left_count + self.right_count

    @property
    def m(self) -> int:
        return len(self.edges)

    # N and W are the usual names for the largest edge weight and the total.
    @property
    def N(self) -> int:
        return self.max_weight

    @property
    def W(self) -> int:
        return self.total_weight

    def weight(self, x: int, y: int) -> int:
        """Weight of edge xy, or 0 if x and y are not adjacent."""
        e = self._index.get((x, y))
        return 0 if e is None else self.edges[e][2]

    def has_edge(self, x: int, y: int) -> bool:
        return (x, y) in self._index

    def edge_id(self, x: int, y: int) -> int:
        return self._index[x, y]

    def nodes(self) -> list[NodeId]:
        return [NodeId(Side.LEFT, i) for i in range(self.left_count)] + [
            NodeId(Side.RIGHT, j) for j in range(self.right_count)
        ]

    def degree(self, node: NodeId) -> int:
        adj = self.left_adj if node.side is Side.LEFT else self.right_adj
        return len(adj[node.index])

    def with_edges(self, edges: Iterable[Edge]) -> BipartiteGraph:
        """Same node index space, different edge list."""
        return BipartiteGraph(self.left_count, self.right_count, tuple(edges))


def build_graph(left_count: int, right_count: int, edges: Iterable[Sequence[int]]) -> BipartiteGraph:
    """Validate an edge list and build the graph.

    Raises DuplicateEdge, ZeroOrNegativeWeight or IndexOutOfRange.
    """
    return BipartiteGraph(
        int(left_count), int(right_count), tuple((int(x), int(y), int(w)) for x, y, w in edges)
    )


@dataclass(frozen=True)
class Matching:
    """Node-disjoint set of edges and its total weight under some graph.

    Build through :meth:`of` to get the invariants checked.
    """

    pairs: tuple[tuple[int, int], ...]
    weight: int

    @classmethod
    def of(cls, graph: BipartiteGraph, pairs: Iterable[Sequence[int]]) -> Matching:
        seen_x: set[int] = set()
        seen_y: set[int] = set()
        total = 0
        clean = []
        for x, y in pairs:
            x, y = int(x), int(y)
            if not graph.has_edge(x, y):
                raise NotAMatching(f"({x}, {y}) is not an edge")
            if x in seen_x or y in seen_y:
                raise NotAMatching(f"node of ({x}, {y}) is matched twice")
            seen_x.add(x)
            seen_y.add(y)
            total += graph.weight(x, y)
            clean.append((x, y))
        return cls(tuple(sorted(clean)), total)

    @classmethod
    def empty(cls) -> Matching:
        return cls((), 0)

    def __len__(self) -> int:
        return len(self.pairs)

    def left_mates(self) -> dict[int, int]:
        return dict(self.pairs)

    def right_mates(self) -> dict[int, int]:
        return {y: x for x, y in self.pairs}

    def is_matched(self, node: NodeId) -> bool:
        k = 0 if node.side is Side.LEFT else 1
        return any(p[k] == node.index for p in self.pairs)


@dataclass(frozen=True)
class Cover:
    """Nonnegative integer label per node (X labels first, then Y)."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.left) or any(v < 0 for v in self.right):
            raise InfeasibleInput("cover values must be nonnegative")

    @property
    def weight(self) -> int:
        return sum(self.left) + sum(self.right)

    @classmethod
    def zero(cls, graph: BipartiteGraph) -> Cover:
        return cls((0,) * graph.left_count, (0,) * graph.right_count)

    @classmethod
    def from_values(
        cls,
        graph: BipartiteGraph,
        left: Mapping[int, int] | None = None,
        right: Mapping[int, int] | None = None,
    ) -> Cover:
        """Sparse constructor; unspecified nodes get 0."""
        lv = [0] * graph.left_count
        rv = [0] * graph.right_count
        for i, v in (left or {}).items():
            lv[i] = int(v)
        for j, v in (right or {}).items():
            rv[j] = int(v)
        return cls(tuple(lv), tuple(rv))

    def __getitem__(self, node: NodeId) -> int:
        return (self.left if node.side is Side.LEFT else self.right)[node.index]

    def __add__(self, other: Cover) -> Cover:
        if len(self.left) != len(other.left) or len(self.right) != len(other.right):
            raise ValueError("covers over different index spaces")
        return Cover(
            tuple(a + b for a, b in zip(self.left, other.left)),
            tuple(a + b for a, b in zip(self.right, other.right)),
        )

    def fits(self, graph: BipartiteGraph) -> bool:
        return len(self.left) == graph.left_count and len(self.right) == graph.right_count


def slice_top(graph: BipartiteGraph, h: int) -> BipartiteGraph:
    """Edges with weight above ``N - h``, each reduced by ``N - h``.

    ``h = 1`` gives the unit-weight graph of the heaviest edges; ``h = N``
    returns the graph unchanged.
    """
    top = graph.max_weight
    if not 1 <= h <= top:
        raise HOutOfRange(f"h={h} outside [1, {top}]")
    cut = top - h
    return graph.with_edges((x, y, w - cut) for x, y, w in graph.edges if w > cut)


def residual_graph(graph: BipartiteGraph, cover: Cover) -> BipartiteGraph:
    """Edges whose weight still exceeds the cover, reweighted by the excess."""
    if not cover.fits(graph):
        raise InfeasibleInput("cover does not match the graph's node counts")
    cl, cr = cover.left, cover.right
    kept = []
    for x, y, w in graph.edges:
        r = w - cl[x] - cr[y]
        if r > 0:
            kept.append((x, y, r))
    return graph.with_edges(kept)


def remove_node(graph: BipartiteGraph, node: NodeId) -> BipartiteGraph:
    """G - {u}: drop every edge at ``node`` but keep the index space."""
    k = 0 if node.side is Side.LEFT else 1
    return graph.with_edges(e for e in graph.edges if e[k] != node.index)


def verify_cover(graph: BipartiteGraph, cover: Cover) -> bool:
    """True iff every edge is dominated: C(x) + C(y) >= w(x, y)."""
    if not cover.fits(graph):
        return False
    cl, cr = cover.left, cover.right
    return all(cl[x] + cr[y] >= w for x, y, w in graph.edges)


def _check_matching(graph: BipartiteGraph, matching: Matching) -> None:
    rebuilt = Matching.of(graph, matching.pairs)
    if rebuilt.weight != matching.weight:
        raise InfeasibleInput(
            f"matching claims weight {matching.weight}, edges sum to {rebuilt.weight}"
        )


def complementary_slackness(graph: BipartiteGraph, matching: Matching, cover: Cover) -> bool:
    """Positive-cover nodes are all matched and every matched edge is tight."""
    cl, cr = cover.left, cover.right
    matched_x = {x for x, _ in matching.pairs}
    matched_y = {y for _, y in matching.pairs}
    if any(v > 0 and i not in matched_x for i, v in enumerate(cl)):
        return False
    if any(v > 0 and j not in matched_y for j, v in enumerate(cr)):
        return False
    return all(cl[x] + cr[y] == graph.weight(x, y) for x, y in matching.pairs)


def verify_duality(
    graph: BipartiteGraph, matching: Matching, cover: Cover, mwm: int | None = None
) -> bool:
    """Check that ``matching`` and ``cover`` certify each other as optimal.

    The equal-weight test and the complementary-slackness test are both
    evaluated; they are equivalent for any valid pair, so disagreement
    raises InternalInconsistency.  When an independently known optimum
    ``mwm`` is passed, joint optimality is checked against it as well.
    Raises InfeasibleInput if the matching is invalid or the cover does
    not dominate every edge.
    """
    _check_matching(graph, matching)
    if not verify_cover(graph, cover):
        raise InfeasibleInput("cover does not dominate every edge")
    equal_weight = matching.weight == cover.weight
    slack = complementary_slackness(graph, matching, cover)
    if equal_weight != slack:
        raise InternalInconsistency(
            f"weight test says {equal_weight}, slackness test says {slack}"
        )
    if mwm is not None:
        optimal = matching.weight == mwm and cover.weight == mwm
        if optimal != equal_weight:
            raise InternalInconsistency(
                f"optimality against mwm={mwm} is {optimal}, weight test is {equal_weight}"
            )
    return equal_weight
