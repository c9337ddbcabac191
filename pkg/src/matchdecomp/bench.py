"""Wall-clock comparison of the decomposition solver and the Hungarian oracle."""

from __future__ import annotations

import gc
import math
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

from .decomposition import compute_mwm
from .instances import gen_random
from .oracle import oracle_hungarian

THREADS_ENV = "MATCHDECOMP_THREADS"


def median_time(fn: Callable[[], Any], repeat: int) -> tuple[float, Any]:
    """Median wall time in seconds over ``repeat`` calls, and the last result.

    The collector is paused while timing, as ``timeit`` does.
    """
    times = []
    result = None
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for _ in range(repeat):
            t0 = time.perf_counter()
            result = fn()
            times.append(time.perf_counter() - t0)
    finally:
        if enabled:
            gc.enable()
    return statistics.median(times), result


def k_factor(x: float, y: float) -> float | None:
    """log x / log(x^2 / y); None where undefined."""
    if x <= 1 or y <= 0 or x * x <= y:
        return None
    return math.log(x) / math.log(x * x / y)


def run_cell(nodes: int, edges: int, max_weight: int, seed: int, repeat: int) -> dict:
    left = nodes // 2
    right = nodes - left
    graph = gen_random(left, right, edges, max_weight, seed)
    t_solver, mwm = median_time(lambda: compute_mwm(graph), repeat)
    t_hung, (_, ref) = median_time(lambda: oracle_hungarian(graph), repeat)
    k = k_factor(graph.n, graph.W / graph.N) if graph.N else None
    return {
        "nodes": graph.n,
        "edges": graph.m,
        "max_weight": graph.N,
        "total_weight": graph.W,
        "w_over_n": round(graph.W / graph.N, 3) if graph.N else 0,
        "k": None if k is None else round(k, 4),
        "solver_ms": round(1000 * t_solver, 3),
        "hungarian_ms": round(1000 * t_hung, 3),
        "speedup": round(t_hung / t_solver, 3) if t_solver > 0 else None,
        "mwm": mwm,
        "agree": mwm == ref,
    }


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def run_grid(
    nodes: int, edges: int, max_weights: list[int], seed: int = 0, repeat: int = 3
) -> list[dict]:
    args = [(nodes, edges, n_max, seed + i, repeat) for i, n_max in enumerate(max_weights)]
    workers = min(thread_cap(), len(args))
    if workers <= 1:
        return [run_cell(*a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_cell, *zip(*args)))
