"""Command-line interface.

Every subcommand except ``gen`` writes one JSON result document.  Exit
codes: 0 ok, 1 other failure, 2 parse error, 3 constraint violation,
4 validation mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, TextIO

from .bench import run_grid
from .cavity import all_cavity
from .decomposition import compute_min_cover, compute_mwm
from .errors import (
    ConstraintError,
    InfeasibleInput,
    MatchDecompError,
    ParseError,
    ValidationError,
)
from .graph import BipartiteGraph, Cover, Matching, NodeId, verify_cover, verify_duality
from .instances import format_instance, gen_random, parse_instance_with_matching
from .oracle import oracle_all_cavity, oracle_hungarian, oracle_mwm_exhaustive
from .recovery import solve

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_CONSTRAINT = 3
EXIT_MISMATCH = 4


class Mismatch(ValidationError):
    pass


class _Timer:
    def __init__(self) -> None:
        self.phases: dict[str, float] = {}

    def run(self, name: str, fn, *args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        self.phases[name] = round(1000 * (time.perf_counter() - t0), 3)
        return out


def _node_values(left, right) -> list[list[Any]]:
    return [[f"x{i + 1}", v] for i, v in enumerate(left)] + [
        [f"y{j + 1}", v] for j, v in enumerate(right)
    ]


def _instance_summary(graph: BipartiteGraph) -> dict[str, int]:
    return {
        "left": graph.left_count,
        "right": graph.right_count,
        "edges": graph.m,
        "max_weight": graph.N,
        "total_weight": graph.W,
    }


def _pairs_1based(matching: Matching) -> list[list[int]]:
    return [[x + 1, y + 1] for x, y in matching.pairs]


def _read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        return fh.read()


def _load(args, stdin: TextIO, timer: _Timer):
    text = _read_text(args.input, stdin)
    return timer.run("parse", parse_instance_with_matching, text)


def _cmd_mwm(args, graph, pairs, timer) -> dict:
    value = timer.run("solve", compute_mwm, graph)
    doc = {"mwm": value}
    if args.validate:
        ref = timer.run("validate", lambda: oracle_hungarian(graph)[1])
        if ref != value:
            raise Mismatch(f"solver says {value}, Hungarian oracle says {ref}")
    return doc


def _cmd_cover(args, graph, pairs, timer) -> dict:
    cover = timer.run("solve", compute_min_cover, graph)
    if args.validate and not verify_cover(graph, cover):
        raise Mismatch("computed labels are not a cover")
    return {"mwm": cover.weight, "cover": _node_values(cover.left, cover.right), "cover_weight": cover.weight}


def _cmd_match(args, graph, pairs, timer) -> dict:
    sol = timer.run("solve", solve, graph)
    duality = timer.run("duality", verify_duality, graph, sol.matching, sol.cover)
    if args.validate:
        ref = timer.run("validate", lambda: oracle_hungarian(graph)[1])
        if ref != sol.weight:
            raise Mismatch(f"solver says {sol.weight}, Hungarian oracle says {ref}")
    return {
        "mwm": sol.weight,
        "matching": _pairs_1based(sol.matching),
        "matching_weight": sol.matching.weight,
        "cover": _node_values(sol.cover.left, sol.cover.right),
        "cover_weight": sol.cover.weight,
        "duality": duality,
    }


def _cmd_cavity(args, graph, pairs, timer) -> dict:
    cover: Cover | None = None
    if pairs is None:
        sol = timer.run("solve", solve, graph)
        matching, cover = sol.matching, sol.cover
    else:
        matching = Matching.of(graph, pairs)
    table = timer.run("cavity", all_cavity, graph, matching, validate=args.validate, cover=cover)
    return {
        "mwm": table.base,
        "matching": _pairs_1based(matching),
        "cavity": _node_values(table.left, table.right),
    }


def _result_field(result: dict, key: str, kind: type) -> Any:
    value = result[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise ParseError(1, f"result field {key!r} has the wrong type")
    return value


def _labelled(graph: BipartiteGraph, entries, key: str) -> tuple[list[int], list[int]]:
    left = [0] * graph.left_count
    right = [0] * graph.right_count
    try:
        for label, value in entries:
            node = NodeId.parse(label)
            (left if node.side.value == "x" else right)[node.index] = int(value)
    except (ValueError, TypeError, IndexError):
        raise ParseError(1, f"result field {key!r} is malformed") from None
    return left, right


def _cmd_verify(args, graph, pairs, timer, stdin: TextIO) -> dict:
    try:
        result = json.loads(_read_text(args.result, stdin))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, f"result is not JSON: {exc.msg}", exc.colno) from None
    if not isinstance(result, dict):
        raise ParseError(1, "result document must be a JSON object")
    oracle = oracle_mwm_exhaustive if args.oracle == "exhaustive" else (lambda g: oracle_hungarian(g)[1])
    ref = timer.run("oracle", oracle, graph)
    checks: list[dict] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    if "mwm" in result:
        claimed = _result_field(result, "mwm", int)
        check("mwm", claimed == ref, f"claimed {claimed}, oracle {ref}")
    matching = cover = None
    if "matching" in result:
        try:
            matching = Matching.of(graph, [(x - 1, y - 1) for x, y in result["matching"]])
        except InfeasibleInput as exc:
            check("matching_valid", False, str(exc))
        except (TypeError, ValueError):
            raise ParseError(1, "result field 'matching' is malformed") from None
        else:
            check("matching_weight", matching.weight == ref, f"weight {matching.weight}, oracle {ref}")
            if "matching_weight" in result:
                claimed = _result_field(result, "matching_weight", int)
                check("matching_weight_claim", claimed == matching.weight, f"claimed {claimed}")
    if "cover" in result:
        left, right = _labelled(graph, result["cover"], "cover")
        try:
            cover = Cover(tuple(left), tuple(right))
        except InfeasibleInput as exc:
            check("cover_valid", False, str(exc))
        else:
            feasible = verify_cover(graph, cover)
            check("cover_feasible", feasible)
            check("cover_weight", cover.weight == ref, f"weight {cover.weight}, oracle {ref}")
            if "cover_weight" in result:
                claimed = _result_field(result, "cover_weight", int)
                check("cover_weight_claim", claimed == cover.weight, f"claimed {claimed}")
            if matching is not None and feasible and "duality" in result:
                actual = verify_duality(graph, matching, cover)
                check("duality", result["duality"] == actual, f"claimed {json.dumps(result['duality'])}, actual {json.dumps(actual)}")
    if "cavity" in result:
        left, right = _labelled(graph, result["cavity"], "cavity")
        method = "exhaustive" if args.oracle == "exhaustive" else "hungarian"
        table = timer.run("oracle_cavity", oracle_all_cavity, graph, method)
        bad = [
            f"{node.label()}: claimed {got}, oracle {want}"
            for (node, want), got in zip(table.items(), left + right)
            if got != want
        ]
        check("cavity", not bad, "; ".join(bad))
    ok = all(c["ok"] for c in checks)
    return {"verify": {"ok": ok, "oracle": args.oracle, "mwm": ref, "checks": checks}}


def _cmd_bench(args) -> dict:
    weights = [int(w) for w in str(args.maxweight).split(",")]
    rows = run_grid(args.nodes, args.edges, weights, seed=args.seed, repeat=args.repeat)
    return {"bench": rows, "all_agree": all(r["agree"] for r in rows)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchdecomp",
        description="Maximum weight bipartite matching, minimum weight covers and all-cavity weights.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, validate_help):
        p.add_argument("--input", "-i", default="-", help="instance file, '-' for stdin")
        p.add_argument("--output", "-o", help="write the document here instead of stdout")
        p.add_argument("--validate", action="store_true", help=validate_help)

    add_io(sub.add_parser("mwm", help="weight of a maximum weight matching"), "cross-check with the Hungarian oracle")
    add_io(sub.add_parser("cover", help="minimum weight cover"), "re-check cover feasibility")
    add_io(sub.add_parser("match", help="matching, cover and duality check"), "cross-check with the Hungarian oracle")
    add_io(
        sub.add_parser("cavity", help="mwm(G - u) for every node u"),
        "check the supplied matching is maximum before use",
    )
    p = sub.add_parser("verify", help="re-check a result document against an instance")
    add_io(p, argparse.SUPPRESS)
    p.add_argument("--result", "-r", required=True, help="result document (JSON)")
    p.add_argument("--oracle", choices=("exhaustive", "hungarian"), default="hungarian")

    p = sub.add_parser("gen", help="write a random instance")
    p.add_argument("--nodes", type=int, default=20, help="total node count, split evenly")
    p.add_argument("--left", type=int, help="override the left side size")
    p.add_argument("--right", type=int, help="override the right side size")
    p.add_argument("--edges", type=int, default=40)
    p.add_argument("--maxweight", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")

    p = sub.add_parser("bench", help="decomposition solver vs Hungarian timing table")
    p.add_argument("--nodes", type=int, default=1000)
    p.add_argument("--edges", type=int, default=4000)
    p.add_argument("--maxweight", default="1,2,4,8,16,32", help="comma-separated grid of N")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    return parser


def dump_document(doc: Any, indent: int = 0) -> str:
    """JSON with two-space indent; lists of scalars stay on one line."""
    pad = "  " * (indent + 1)
    if isinstance(doc, dict):
        if not doc:
            return "{}"
        body = ",\n".join(f"{pad}{json.dumps(k)}: {dump_document(v, indent + 1)}" for k, v in doc.items())
        return "{\n" + body + "\n" + "  " * indent + "}"
    if isinstance(doc, list):
        if all(not isinstance(v, (dict, list)) for v in doc):
            return json.dumps(doc)
        body = ",\n".join(pad + dump_document(v, indent + 1) for v in doc)
        return "[\n" + body + "\n" + "  " * indent + "]"
    return json.dumps(doc)


def _emit(text: str, path: str | None, stdout: TextIO) -> None:
    if path:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def run_cli(
    argv: list[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    timer = _Timer()
    try:
        if args.command == "gen":
            left = args.left if args.left is not None else args.nodes // 2
            right = args.right if args.right is not None else args.nodes - args.nodes // 2
            graph = gen_random(left, right, args.edges, args.maxweight, args.seed)
            comment = f"gen left={left} right={right} edges={args.edges} maxweight={args.maxweight} seed={args.seed}"
            _emit(format_instance(graph, comments=[comment]), args.output, stdout)
            return EXIT_OK
        if args.command == "bench":
            doc = {"command": "bench"}
            doc.update(timer.run("bench", _cmd_bench, args))
        else:
            graph, pairs = _load(args, stdin, timer)
            doc = {"command": args.command, "instance": _instance_summary(graph)}
            if args.command == "verify":
                doc.update(_cmd_verify(args, graph, pairs, timer, stdin))
            else:
                handler = {
                    "mwm": _cmd_mwm,
                    "cover": _cmd_cover,
                    "match": _cmd_match,
                    "cavity": _cmd_cavity,
                }[args.command]
                doc.update(handler(args, graph, pairs, timer))
        doc["timings"] = timer.phases
        _emit(dump_document(doc) + "\n", args.output, stdout)
        if args.command == "verify" and not doc["verify"]["ok"]:
            failed = [c["name"] for c in doc["verify"]["checks"] if not c["ok"]]
            stderr.write(f"matchdecomp: verification failed: {', '.join(failed)}\n")
            return EXIT_MISMATCH
        if args.command == "bench" and not doc["all_agree"]:
            stderr.write("matchdecomp: solver and Hungarian disagree\n")
            return EXIT_MISMATCH
        return EXIT_OK
    except ParseError as exc:
        stderr.write(f"matchdecomp: parse error: {exc}\n")
        return EXIT_PARSE
    except (ConstraintError, InfeasibleInput) as exc:
        stderr.write(f"matchdecomp: {type(exc).__name__}: {exc}\n")
        return EXIT_CONSTRAINT
    except ValidationError as exc:
        stderr.write(f"matchdecomp: {type(exc).__name__}: {exc}\n")
        return EXIT_MISMATCH
    except (MatchDecompError, OSError) as exc:
        stderr.write(f"matchdecomp: {type(exc).__name__}: {exc}\n")
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
