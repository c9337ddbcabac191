"""Reference solvers that share no code with the decomposition route.

* :func:`oracle_mwm_exhaustive` enumerates matchings by DP over subsets of
  the smaller side.
* :func:`oracle_hungarian` is the O(n^3) potentials method on the square
  matrix obtained by padding with zero-weight slots.
* :func:`oracle_all_cavity` deletes each node and re-solves.
* :func:`oracle_even_path_starts` enumerates simple alternating paths.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .cavity import CavityTable, UnfoldedGraph, UnfoldedMatching
from .errors import TooLarge
from .graph import BipartiteGraph, Cover, Matching, NodeId, Side, remove_node

EXHAUSTIVE_SIDE_LIMIT = 16


def oracle_mwm_exhaustive(graph: BipartiteGraph) -> int:
    """Exact mwm by enumerating every matching.

    States are (prefix of the larger side, set of used nodes on the smaller
    side), so the smaller side must have at most EXHAUSTIVE_SIDE_LIMIT
    nodes that carry edges; otherwise TooLarge is raised.
    """
    # one row per node of the larger side, listing (smaller-side node, weight)
    if graph.left_count <= graph.right_count:
        rows = [[(x, w) for x, _, w in (graph.edges[e] for e in adj)] for adj in graph.right_adj]
    else:
        rows = [[(y, w) for _, y, w in (graph.edges[e] for e in adj)] for adj in graph.left_adj]
    used_small = sorted({s for row in rows for s, _ in row})
    if len(used_small) > EXHAUSTIVE_SIDE_LIMIT:
        raise TooLarge(f"{len(used_small)} nodes on the smaller side exceeds {EXHAUSTIVE_SIDE_LIMIT}")
    bit = {s: 1 << k for k, s in enumerate(used_small)}
    best: dict[int, int] = {0: 0}
    for row in rows:
        if not row:
            continue
        nxt = dict(best)
        for mask, val in best.items():
            for s, w in row:
                b = bit[s]
                if mask & b:
                    continue
                key = mask | b
                if nxt.get(key, -1) < val + w:
                    nxt[key] = val + w
        best = nxt
    return max(best.values())


def _hungarian(graph: BipartiteGraph) -> tuple[list[tuple[int, int]], int, Cover]:
    n = max(graph.left_count, graph.right_count)
    if n == 0 or not graph.edges:
        return [], 0, Cover.zero(graph)
    # minimise cost = -weight over the padded square matrix; rows 1..n, cols 1..n
    cost = np.zeros((n + 1, n + 1), dtype=np.int64)
    for x, y, w in graph.edges:
        cost[x + 1, y + 1] = -w
    inf = np.int64(1) << 60
    u = np.zeros(n + 1, dtype=np.int64)
    v = np.zeros(n + 1, dtype=np.int64)
    p = np.zeros(n + 1, dtype=np.int64)  # p[j]: row assigned to column j
    way = np.zeros(n + 1, dtype=np.int64)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = np.full(n + 1, inf, dtype=np.int64)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = p[j0]
            cur = cost[i0] - u[i0] - v
            better = ~used & (cur < minv)
            better[0] = False
            minv[better] = cur[better]
            way[better] = j0
            masked = np.where(used, inf, minv)
            masked[0] = inf
            j1 = int(np.argmin(masked))
            delta = masked[j1]
            u[p[used]] += delta
            v[used] -= delta
            free = ~used
            free[0] = False
            minv[free] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1

    pairs = []
    total = 0
    for j in range(1, n + 1):
        x, y = int(p[j]) - 1, j - 1
        if x < graph.left_count and y < graph.right_count and graph.has_edge(x, y):
            pairs.append((x, y))
            total += graph.weight(x, y)

    # Dual: row label -u, column label -v dominates the padded weights.
    # Shift the constant between the two sides so both are nonnegative.
    rows = -u[1:]
    cols = -v[1:]
    shift = int(cols.min())
    rows = rows + shift
    cols = cols - shift
    cover = Cover(
        tuple(int(r) for r in rows[: graph.left_count]),
        tuple(int(c) for c in cols[: graph.right_count]),
    )
    return pairs, total, cover


def oracle_hungarian(graph: BipartiteGraph) -> tuple[Matching, int]:
    """Maximum weight matching and its weight by the Hungarian method."""
    pairs, total, _ = _hungarian(graph)
    return Matching.of(graph, pairs), total


def hungarian_cover(graph: BipartiteGraph) -> Cover:
    """The Hungarian method's final potentials as a minimum weight cover."""
    return _hungarian(graph)[2]


def oracle_all_cavity(graph: BipartiteGraph, method: str = "hungarian") -> CavityTable:
    """mwm(G - {u}) for every u by independent re-solves."""
    solver: Callable[[BipartiteGraph], int]
    if method == "hungarian":
        solver = lambda g: oracle_hungarian(g)[1]  # noqa: E731
    elif method == "exhaustive":
        solver = oracle_mwm_exhaustive
    else:
        raise ValueError(f"unknown method {method!r}")
    base = solver(graph)
    left = tuple(solver(remove_node(graph, NodeId(Side.LEFT, i))) for i in range(graph.left_count))
    right = tuple(
        solver(remove_node(graph, NodeId(Side.RIGHT, j))) for j in range(graph.right_count)
    )
    return CavityTable(base, left, right)


def oracle_even_path_starts(unfolded: UnfoldedGraph, phi_m: UnfoldedMatching) -> tuple[list[bool], list[bool]]:
    """For every copy, does an even alternating path start there?

    Plain depth-first enumeration of simple paths with no memoisation;
    exponential, for tiny graphs only.
    """

    def side(other_adj, mate):
        out = []
        for start, m in enumerate(mate):
            if m < 0:
                out.append(True)
                continue
            out.append(_extend(start, {start}, other_adj, mate))
        return out

    def _extend(a, on_path, other_adj, mate):
        # a is matched and on the start side; take its matching edge, then a
        # non-matching edge back to the start side.
        b = mate[a]
        for c in other_adj[b]:
            if c == a or c in on_path:
                continue
            if mate[c] < 0:
                return True
            on_path.add(c)
            if _extend(c, on_path, other_adj, mate):
                return True
            on_path.discard(c)
        return False

    u, lm, rm = unfolded, phi_m.left_mate, phi_m.right_mate
    return side(u.right_adj, lm), side(u.left_adj, rm)
