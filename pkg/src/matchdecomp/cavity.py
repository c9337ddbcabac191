"""All-cavity maximum weight matchings in time linear in the total weight.

The unfolded graph replaces every node u by copies u^1..u^a (a = heaviest
edge at u) and every edge uv of weight b by the b unit edges u^i v^(b+1-i).
A maximum weight matching M of G lifts to a maximum cardinality matching
phi(M) of the unfolded graph.  A copy gets flag 0 when some even-length
alternating path for phi(M) starts at it, else 1, and the flags of u's
copies sum to mwm(G) - mwm(G - u).

Copies are numbered per side: copy i (1-based) of left node x has id
``left_offset[x] + i - 1``; right copies likewise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .decomposition import compute_mwm
from .errors import MatchingNotOptimal, NotAMatching
from .graph import BipartiteGraph, Cover, Matching, NodeId, Side, verify_duality

REVERSE = "reverse"
FORWARD = "forward"


def _offsets(alpha: list[int]) -> list[int]:
    out = [0] * (len(alpha) + 1)
    for i, a in enumerate(alpha):
        out[i + 1] = out[i] + a
    return out


@dataclass(frozen=True, eq=False)
class UnfoldedGraph:
    left_alpha: list[int]
    right_alpha: list[int]
    left_offset: list[int]  # length left_count + 1
    right_offset: list[int]
    left_adj: list[list[int]]  # left copy -> right copies
    right_adj: list[list[int]]  # right copy -> left copies

    @property
    def left_copies(self) -> int:
        return self.left_offset[-1]

    @property
    def right_copies(self) -> int:
        return self.right_offset[-1]

    @property
    def copy_count(self) -> int:
        return self.left_copies + self.right_copies

    @property
    def edge_count(self) -> int:
        return sum(map(len, self.left_adj))

    def copy_edges(self) -> Iterator[tuple[int, int]]:
        for a, nbrs in enumerate(self.left_adj):
            for b in nbrs:
                yield a, b

    def copy_id(self, node: NodeId, level: int) -> int:
        offset, alpha = (
            (self.left_offset, self.left_alpha)
            if node.side is Side.LEFT
            else (self.right_offset, self.right_alpha)
        )
        if not 1 <= level <= alpha[node.index]:
            raise IndexError(f"{node.label()} has no copy {level}")
        return offset[node.index] + level - 1

    def back_map(self, side: Side, copy: int) -> tuple[NodeId, int]:
        """Original node and 1-based level of a copy id."""
        offset = self.left_offset if side is Side.LEFT else self.right_offset
        lo, hi = 0, len(offset) - 1
        # last u with offset[u] <= copy; nodes with zero copies share offsets
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if offset[mid] <= copy:
                lo = mid
            else:
                hi = mid - 1
        return NodeId(side, lo), copy - offset[lo] + 1

    def as_unit_graph(self) -> BipartiteGraph:
        """The unfolded graph as an ordinary unit-weight graph."""
        return BipartiteGraph(
            self.left_copies, self.right_copies, tuple((a, b, 1) for a, b in self.copy_edges())
        )


def unfold(graph: BipartiteGraph) -> UnfoldedGraph:
    left_alpha = [0] * graph.left_count
    right_alpha = [0] * graph.right_count
    for x, y, w in graph.edges:
        if w > left_alpha[x]:
            left_alpha[x] = w
        if w > right_alpha[y]:
            right_alpha[y] = w
    loff = _offsets(left_alpha)
    roff = _offsets(right_alpha)
    ladj: list[list[int]] = [[] for _ in range(loff[-1])]
    radj: list[list[int]] = [[] for _ in range(roff[-1])]
    for x, y, w in graph.edges:
        a0 = loff[x]
        b_last = roff[y] + w - 1
        for i in range(w):
            a, b = a0 + i, b_last - i
            ladj[a].append(b)
            radj[b].append(a)
    return UnfoldedGraph(left_alpha, right_alpha, loff, roff, ladj, radj)


@dataclass(frozen=True, eq=False)
class UnfoldedMatching:
    left_mate: list[int]  # -1 when unmatched
    right_mate: list[int]

    @property
    def size(self) -> int:
        return sum(1 for b in self.left_mate if b >= 0)

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.left_mate) if b >= 0]


def unfold_matching(
    graph: BipartiteGraph, matching: Matching, unfolded: UnfoldedGraph | None = None
) -> UnfoldedMatching:
    """Lift M: each matched edge of weight b becomes its b copy edges."""
    u = unfolded if unfolded is not None else unfold(graph)
    if Matching.of(graph, matching.pairs).weight != matching.weight:
        raise NotAMatching("matching weight does not match its edges")
    lm = [-1] * u.left_copies
    rm = [-1] * u.right_copies
    loff, roff = u.left_offset, u.right_offset
    for x, y in matching.pairs:
        w = graph.weight(x, y)
        a0 = loff[x]
        b_last = roff[y] + w - 1
        for i in range(w):
            lm[a0 + i] = b_last - i
            rm[b_last - i] = a0 + i
    return UnfoldedMatching(lm, rm)


@dataclass(frozen=True, eq=False)
class RhoFlags:
    unfolded: UnfoldedGraph
    left: list[int]  # per left copy
    right: list[int]

    def run(self, node: NodeId) -> list[int]:
        if node.side is Side.LEFT:
            off, flags = self.unfolded.left_offset, self.left
        else:
            off, flags = self.unfolded.right_offset, self.right
        return flags[off[node.index] : off[node.index + 1]]

    def deficit(self, node: NodeId) -> int:
        return sum(self.run(node))


def _even_starts_reverse(adj: list[list[int]], mate: list[int], other_mate: list[int]) -> list[bool]:
    # Walk backwards from every unmatched copy: a non-matching edge to the
    # other side, then that node's matching edge back.  Each reached copy
    # is the start of an even alternating path ending at the seed.
    seen = [m < 0 for m in mate]
    stack = [a for a, m in enumerate(mate) if m < 0]
    while stack:
        a = stack.pop()
        own = mate[a]
        for b in adj[a]:
            if b == own:
                continue
            c = other_mate[b]
            if c < 0:
                raise MatchingNotOptimal("lifted matching has an augmenting path")
            if not seen[c]:
                seen[c] = True
                stack.append(c)
    return seen


def _even_starts_forward(other_adj: list[list[int]], mate: list[int]) -> list[bool]:
    # Independent search from each copy along matched-then-unmatched steps.
    out = []
    for start, m in enumerate(mate):
        if m < 0:
            out.append(True)
            continue
        visited = {start}
        queue = deque([start])
        found = False
        while queue and not found:
            a = queue.popleft()
            b = mate[a]
            for c in other_adj[b]:
                if c == a or c in visited:
                    continue
                if mate[c] < 0:
                    found = True
                    break
                visited.add(c)
                queue.append(c)
        out.append(found)
    return out


def compute_rho(unfolded: UnfoldedGraph, phi_m: UnfoldedMatching, orientation: str = REVERSE) -> RhoFlags:
    """Flags per copy: 0 if an even-length alternating path starts there.

    ``reverse`` is the linear-time multi-source search from unmatched
    copies.  ``forward`` searches separately from every copy; it costs
    O(W) per copy and exists to cross-check the fast route.
    """
    u, lm, rm = unfolded, phi_m.left_mate, phi_m.right_mate
    if orientation == REVERSE:
        left = _even_starts_reverse(u.left_adj, lm, rm)
        right = _even_starts_reverse(u.right_adj, rm, lm)
    elif orientation == FORWARD:
        left = _even_starts_forward(u.right_adj, lm)
        right = _even_starts_forward(u.left_adj, rm)
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    return RhoFlags(u, [0 if s else 1 for s in left], [0 if s else 1 for s in right])


@dataclass(frozen=True)
class CavityTable:
    """mwm(G - {u}) for every node u, plus mwm(G) itself."""

    base: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __getitem__(self, node: NodeId) -> int:
        return (self.left if node.side is Side.LEFT else self.right)[node.index]

    def items(self) -> list[tuple[NodeId, int]]:
        return [(NodeId(Side.LEFT, i), v) for i, v in enumerate(self.left)] + [
            (NodeId(Side.RIGHT, j), v) for j, v in enumerate(self.right)
        ]

    def by_label(self) -> dict[str, int]:
        return {node.label(): v for node, v in self.items()}


def cavity_from_rho(graph: BipartiteGraph, base: int, rho: RhoFlags) -> CavityTable:
    u = rho.unfolded
    lo, ro = u.left_offset, u.right_offset
    lf, rf = rho.left, rho.right
    left = tuple(base - sum(lf[lo[x] : lo[x + 1]]) for x in range(graph.left_count))
    right = tuple(base - sum(rf[ro[y] : ro[y + 1]]) for y in range(graph.right_count))
    return CavityTable(base, left, right)


def all_cavity(
    graph: BipartiteGraph,
    matching: Matching,
    *,
    validate: bool = False,
    cover: Cover | None = None,
) -> CavityTable:
    """mwm(G - {u}) for all u, given a maximum weight matching of G.

    The caller's matching is trusted by default.  With ``validate`` it is
    checked against ``cover`` when one is given (duality), otherwise
    against a fresh solve; a suboptimal matching raises MatchingNotOptimal.
    """
    if validate:
        if cover is not None:
            ok = verify_duality(graph, matching, cover)
        else:
            ok = matching.weight == compute_mwm(graph)
        if not ok:
            raise MatchingNotOptimal(f"matching of weight {matching.weight} is not maximum")
    unfolded = unfold(graph)
    phi_m = unfold_matching(graph, matching, unfolded)
    rho = compute_rho(unfolded, phi_m)
    return cavity_from_rho(graph, matching.weight, rho)
