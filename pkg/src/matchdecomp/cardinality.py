"""Maximum cardinality matching and König covers on unit-weight graphs.

The work functions take a plain adjacency mapping ``left -> [right, ...]``
so the decomposition loop can hand over one weight slice at a time without
building a validated graph object for it.  Results are deterministic: left
nodes are scanned in the order given and neighbours in adjacency order.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import MatchingNotMaximum, NonUnitWeights
from .graph import BipartiteGraph, Cover, Matching

LEFT_SEEDED = "left"
RIGHT_SEEDED = "right"
CONVENTIONS = (LEFT_SEEDED, RIGHT_SEEDED)

_INF = 1 << 60


def hopcroft_karp(
    lefts: Sequence[int], adj: Mapping[int, Sequence[int]]
) -> tuple[dict[int, int], dict[int, int]]:
    """Maximum matching of the bipartite graph ``adj``.

    Returns ``(mate_left, mate_right)``.  Runs in O(sqrt(n) m): each phase
    is one BFS that layers the graph from the free left nodes, then
    iterative DFS along the layers to collect a maximal set of vertex
    disjoint shortest augmenting paths.
    """
    mate_l: dict[int, int] = {}
    mate_r: dict[int, int] = {}
    # greedy start: first free neighbour of each left node, in scan order
    for u in lefts:
        for v in adj[u]:
            if v not in mate_r:
                mate_l[u] = v
                mate_r[v] = u
                break
    while True:
        dist: dict[int, int] = {}
        queue = [u for u in lefts if u not in mate_l]
        for u in queue:
            dist[u] = 0
        limit = _INF
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            du = dist[u]
            if du >= limit:
                continue
            for v in adj[u]:
                w = mate_r.get(v)
                if w is None:
                    if limit == _INF:
                        limit = du + 1
                elif w not in dist:
                    dist[w] = du + 1
                    queue.append(w)
        if limit == _INF:
            return mate_l, mate_r

        ptr: dict[int, int] = {}
        for root in lefts:
            if root in mate_l or dist.get(root) != 0:
                continue
            stack = [root]
            via: list[int] = []
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                i = ptr.get(u, 0)
                du = dist[u]
                step = None
                while i < len(nbrs):
                    v = nbrs[i]
                    i += 1
                    w = mate_r.get(v)
                    if w is None:
                        if du + 1 == limit:
                            step = (v, None)
                            break
                    elif dist.get(w) == du + 1:
                        step = (v, w)
                        break
                ptr[u] = i
                if step is None:
                    dist[u] = _INF
                    stack.pop()
                    if via:
                        via.pop()
                    continue
                v, w = step
                via.append(v)
                if w is not None:
                    stack.append(w)
                    continue
                for a, b in zip(stack, via):
                    mate_l[a] = b
                    mate_r[b] = a
                    dist[a] = _INF
                break


def alternating_reach(
    seeds: Sequence[int],
    adj: Mapping[int, Sequence[int]],
    mate: Mapping[int, int],
) -> tuple[set[int], set[int]]:
    """Nodes reachable from ``seeds`` by alternating paths.

    From a seed-side node every edge may be taken; from the opposite side
    only the matching edge.  Returns ``(seed_side_reached, other_reached)``.
    Raises MatchingNotMaximum if an unmatched node on the other side is
    reached, since that exhibits an augmenting path.
    """
    near: set[int] = set(seeds)
    far: set[int] = set()
    stack = list(seeds)
    while stack:
        u = stack.pop()
        for v in adj.get(u, ()):
            if v in far:
                continue
            far.add(v)
            w = mate.get(v)
            if w is None:
                raise MatchingNotMaximum(f"augmenting path ends at unmatched node {v}")
            if w not in near:
                near.add(w)
                stack.append(w)
    return near, far


def konig_sets(
    lefts: Sequence[int],
    adj: Mapping[int, Sequence[int]],
    mate_l: Mapping[int, int],
    mate_r: Mapping[int, int],
    convention: str = LEFT_SEEDED,
) -> tuple[list[int], list[int]]:
    """Minimum vertex cover ``(cover_lefts, cover_rights)`` from a maximum matching.

    Left-seeded: Z is everything alternating-reachable from unmatched left
    nodes, cover = (X - Z) + (Y & Z).  Right-seeded is the mirror image.
    """
    if convention == LEFT_SEEDED:
        seeds = [u for u in lefts if u not in mate_l]
        z_left, z_right = alternating_reach(seeds, adj, mate_r)
        cover_l = [u for u in lefts if u not in z_left]
        cover_r = sorted(z_right)
    elif convention == RIGHT_SEEDED:
        radj: dict[int, list[int]] = {}
        for u in lefts:
            for v in adj[u]:
                radj.setdefault(v, []).append(u)
        seeds = [v for v in sorted(radj) if v not in mate_r]
        z_right, z_left = alternating_reach(seeds, radj, mate_l)
        cover_r = [v for v in sorted(radj) if v not in z_right]
        cover_l = sorted(z_left)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    if len(cover_l) + len(cover_r) != len(mate_l):
        raise MatchingNotMaximum(
            f"cover has {len(cover_l) + len(cover_r)} nodes, matching has {len(mate_l)} edges"
        )
    return cover_l, cover_r


def _unit_adjacency(graph: BipartiteGraph) -> tuple[list[int], dict[int, list[int]]]:
    if any(w != 1 for _, _, w in graph.edges):
        raise NonUnitWeights("cardinality engine needs all edge weights equal to 1")
    adj = {x: [graph.edges[e][1] for e in graph.left_adj[x]] for x in range(graph.left_count)}
    return list(range(graph.left_count)), adj


def max_cardinality_matching(graph: BipartiteGraph) -> Matching:
    lefts, adj = _unit_adjacency(graph)
    mate_l, _ = hopcroft_karp(lefts, adj)
    return Matching.of(graph, mate_l.items())


def has_augmenting_path(graph: BipartiteGraph, matching: Matching) -> bool:
    """One extra BFS phase: does ``matching`` admit an augmenting path?"""
    adj = {x: [graph.edges[e][1] for e in graph.left_adj[x]] for x in range(graph.left_count)}
    mate_l = matching.left_mates()
    seeds = [x for x in range(graph.left_count) if x not in mate_l]
    try:
        alternating_reach(seeds, adj, matching.right_mates())
    except MatchingNotMaximum:
        return True
    return False


def konig_cover(graph: BipartiteGraph, matching: Matching, convention: str = LEFT_SEEDED) -> Cover:
    """0/1 cover of a unit-weight graph with weight equal to ``len(matching)``."""
    lefts, adj = _unit_adjacency(graph)
    cover_l, cover_r = konig_sets(
        lefts, adj, matching.left_mates(), matching.right_mates(), convention
    )
    return Cover.from_values(graph, dict.fromkeys(cover_l, 1), dict.fromkeys(cover_r, 1))
