"""Instance files and random instances.

Text format, one record per line, fields separated by whitespace::

    c any comment
    p bmatch <left_count> <right_count> <edge_count>
    e <x> <y> <weight>        x, y are 1-based
    m <x> <y>                 optional matched pair, used by ``cavity``

The header must precede every ``e`` and ``m`` line and ``edge_count`` must
equal the number of ``e`` lines.  Blank lines are ignored.
"""

from __future__ import annotations

import random
from typing import Iterable

from .errors import (
    ConstraintError,
    DuplicateEdge,
    IndexOutOfRange,
    ParseError,
    TooManyEdges,
    ZeroOrNegativeWeight,
)
from .graph import BipartiteGraph, Matching, build_graph


def _ints(tokens: list[str], line: str, lineno: int) -> list[int]:
    out = []
    pos = 0
    for tok in tokens:
        pos = line.index(tok, pos)
        try:
            if not tok.lstrip("-").isdigit():
                raise ValueError
            out.append(int(tok))
        except ValueError:
            raise ParseError(lineno, f"expected an integer, got {tok!r}", pos + 1) from None
        pos += len(tok)
    return out


def parse_instance_with_matching(text: str) -> tuple[BipartiteGraph, list[tuple[int, int]] | None]:
    """Parse an instance; the second item holds 0-based ``m`` pairs, or None."""
    header: tuple[int, int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    pairs: list[tuple[int, int]] | None = None
    last = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        last = lineno
        if not line.isascii():
            raise ParseError(lineno, "non-ASCII character")
        tokens = line.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "c":
            continue
        if kind == "p":
            if header is not None:
                raise ParseError(lineno, f"second header (first on line {header_line})")
            if len(tokens) != 5 or tokens[1] != "bmatch":
                raise ParseError(lineno, "header must be 'p bmatch <left> <right> <edges>'")
            left, right, count = _ints(tokens[2:], line, lineno)
            if min(left, right, count) < 0:
                raise ParseError(lineno, "header counts must be nonnegative")
            header = (left, right, count)
            header_line = lineno
            continue
        if kind not in ("e", "m"):
            raise ParseError(lineno, f"unknown record type {kind!r}", line.index(kind) + 1)
        if header is None:
            raise ParseError(lineno, f"'{kind}' line before the 'p' header")
        left, right, _ = header
        if kind == "e":
            if len(tokens) != 4:
                raise ParseError(lineno, "edge line must be 'e <x> <y> <weight>'")
            x, y, w = _ints(tokens[1:], line, lineno)
        else:
            if len(tokens) != 3:
                raise ParseError(lineno, "matching line must be 'm <x> <y>'")
            x, y = _ints(tokens[1:], line, lineno)
            w = None
        try:
            if not (1 <= x <= left and 1 <= y <= right):
                raise IndexOutOfRange(f"node pair ({x}, {y}) outside {left}x{right}")
            if kind == "m":
                if pairs is None:
                    pairs = []
                pairs.append((x - 1, y - 1))
                continue
            if w < 1:
                raise ZeroOrNegativeWeight(f"edge ({x}, {y}) has weight {w}")
            if (x, y) in seen:
                raise DuplicateEdge(f"edge ({x}, {y}) repeats line {seen[x, y]}")
        except ConstraintError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
        seen[x, y] = lineno
        edges.append((x - 1, y - 1, w))
    if header is None:
        raise ParseError(max(last, 1), "missing 'p bmatch' header")
    if len(edges) != header[2]:
        raise ParseError(header_line, f"header declares {header[2]} edges, body has {len(edges)}")
    return build_graph(header[0], header[1], edges), pairs


def parse_instance(text: str) -> BipartiteGraph:
    return parse_instance_with_matching(text)[0]


def format_instance(
    graph: BipartiteGraph,
    matching: Matching | Iterable[tuple[int, int]] | None = None,
    comments: Iterable[str] = (),
) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p bmatch {graph.left_count} {graph.right_count} {graph.m}")
    lines += [f"e {x + 1} {y + 1} {w}" for x, y, w in graph.edges]
    if matching is not None:
        pairs = matching.pairs if isinstance(matching, Matching) else matching
        lines += [f"m {x + 1} {y + 1}" for x, y in pairs]
    return "\n".join(lines) + "\n"


def gen_random(left: int, right: int, m: int, max_weight: int, seed: int | None = None) -> BipartiteGraph:
    """``m`` distinct edges drawn uniformly, weights uniform on [1, max_weight]."""
    if m > left * right:
        raise TooManyEdges(f"{m} edges requested, only {left * right} pairs exist")
    if max_weight < 1:
        raise ConstraintError("max_weight must be at least 1")
    rng = random.Random(seed)
    cells = sorted(rng.sample(range(left * right), m))
    return build_graph(
        left, right, [(k // right, k % right, rng.randint(1, max_weight)) for k in cells]
    )
