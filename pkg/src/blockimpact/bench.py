"""Timing harness for the linear-scaling claim.

Graph generation happens outside the measured region; only the analysis
pipeline (components + block forest + subtree sizes + impacts) is timed.
GC is paused inside the timed region, as timeit does, so allocator pauses do
not land on individual rows.
"""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass

from .graph import GeneratorSpec, Graph, generate
from .impact import compute_all_impacts


@dataclass(frozen=True, slots=True)
class BenchRow:
    family: str
    n: int
    m: int
    seconds: float
    ns_per_element: float  # seconds / (n + m), in nanoseconds


def time_all_impacts(g: Graph, repeats: int = 1) -> float:
    """Median wall time of compute_all_impacts over ``repeats`` runs."""
    times = []
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeats):
            t0 = time.perf_counter()
            compute_all_impacts(g)
            times.append(time.perf_counter() - t0)
    finally:
        if was_enabled:
            gc.enable()
    return statistics.median(times)


def sweep(
    family: str,
    sizes: list[int],
    *,
    m_per_n: float = 2.0,
    k: int | None = None,
    seed: int = 0,
    repeats: int = 1,
) -> list[BenchRow]:
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    rows = []
    for n in sizes:
        if n < 1:
            raise ValueError(f"sizes must be >= 1, got {n}")
        m = None
        if family == "gnm":
            m = min(int(round(m_per_n * n)), n * (n - 1) // 2)
        g = generate(GeneratorSpec(family, n, m=m, k=k, seed=seed))
        seconds = time_all_impacts(g, repeats)
        rows.append(BenchRow(family, g.n, g.m, seconds, seconds / (g.n + g.m) * 1e9))
    return rows


def format_rows(rows: list[BenchRow]) -> str:
    out = ["family\tn\tm\tseconds\tns_per_element"]
    for r in rows:
        out.append(f"{r.family}\t{r.n}\t{r.m}\t{r.seconds:.6f}\t{r.ns_per_element:.2f}")
    return "\n".join(out) + "\n"
