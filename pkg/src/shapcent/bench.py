"""Random-graph generators and exact-vs-Monte-Carlo comparison runs."""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .exact import ShapleyVector, solve
from .games import GameSpec
from .graph import Graph
from .montecarlo import ConvergenceTrace, mc_shapley

# 95% normal-approximation interval, matching the shaded-band convention
_Z95 = 1.959963984540054


def gen_complete_weighted(n: int, seed: int) -> Graph:
    """Complete graph on n nodes with i.i.d. U(0,1) edge weights."""
    if n < 2:
        raise ValueError(f"complete weighted graph needs n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            w = float(rng.random())
            while w <= 0.0:  # zero has measure zero but weights must be positive
                w = float(rng.random())
            edges.append((u, v, w))
    return Graph.build(n, edges, directed=False, weighted=True)


def gen_gnp(
    n: int, p: float, seed: int, weighted: bool = False, directed: bool = False
) -> Graph:
    """Erdos-Renyi G(n, p), optionally with U(0,1) weights; seeded."""
    if not 0.0 < p <= 1.0:
        raise ValueError(f"edge probability must be in (0, 1], got {p}")
    rng = np.random.default_rng(seed)
    edges = []
    for u in range(n):
        for v in range(n) if directed else range(u + 1, n):
            if directed and u == v:
                continue
            if rng.random() < p:
                w = 1.0
                if weighted:
                    w = float(rng.random())
                    while w <= 0.0:
                        w = float(rng.random())
                edges.append((u, v, w))
    return Graph.build(n, edges, directed=directed, weighted=weighted)


@dataclass(frozen=True)
class ThresholdResult:
    """Time-to-error statistics for one error threshold."""

    threshold: float
    mean_time_s: float
    half_width_s: float | None  # None when runs < 2
    mean_iterations: float
    censored_runs: int
    speedup: float


@dataclass(frozen=True)
class BenchReport:
    scenario: str
    node_count: int
    edge_count: int
    directed: bool
    weighted: bool
    game: str
    runs: int
    max_iter: int
    exact_method: str
    exact_runtime_s: float
    results: tuple[ThresholdResult, ...]  # thresholds sorted descending

    def to_csv(self) -> str:
        lines = [
            "threshold,mean_time_ms,half_width_ms,mean_iterations,censored_runs,speedup"
        ]
        for r in self.results:
            hw = f"{r.half_width_s * 1e3:.6g}" if r.half_width_s is not None else ""
            lines.append(
                f"{r.threshold:g},{r.mean_time_s * 1e3:.6g},{hw},"
                f"{r.mean_iterations:g},{r.censored_runs},{r.speedup:.6g}"
            )
        return "\n".join(lines) + "\n"

    def format_table(self) -> str:
        head = (
            f"scenario: {self.scenario}\n"
            f"graph: n={self.node_count} m={self.edge_count}"
            f" directed={self.directed} weighted={self.weighted}\n"
            f"game: {self.game}  runs: {self.runs}  max_iter: {self.max_iter}\n"
            f"{self.exact_method} solver: {self.exact_runtime_s * 1e3:.3f} ms\n"
        )
        cols = f"{'thresh':>8} {'mc mean':>12} {'95% hw':>10} {'iters':>9} {'cens':>5} {'speedup':>9}\n"
        body = ""
        for r in self.results:
            hw = f"{r.half_width_s * 1e3:.2f}ms" if r.half_width_s is not None else "-"
            body += (
                f"{r.threshold:>8g} {r.mean_time_s * 1e3:>10.2f}ms {hw:>10} "
                f"{r.mean_iterations:>9.1f} {r.censored_runs:>5} {r.speedup:>8.1f}x\n"
            )
        return head + cols + body


def _one_mc_run(args):
    g, spec, max_iter, seed, reference, stop_error = args
    _, trace = mc_shapley(
        g, spec, max_iter=max_iter, seed=seed, reference=reference, stop_error=stop_error
    )
    return trace


def run_comparison(
    g: Graph,
    spec: GameSpec,
    thresholds,
    runs: int,
    max_iter: int,
    base_seed: int,
    scenario: str = "comparison",
    workers: int = 1,
) -> tuple[BenchReport, list[ConvergenceTrace]]:
    """Time the closed-form solver against seeded Monte Carlo runs.

    Each run r uses seed base_seed + r and stops once the smallest
    threshold is reached (or at max_iter, reported as censored). The
    reference for g5 is the Gaussian approximation, otherwise exact.
    """
    thresholds = sorted(set(float(t) for t in thresholds), reverse=True)
    if not thresholds:
        raise ValueError("empty threshold list")
    if runs < 1:
        raise ValueError(f"runs must be >= 1, got {runs}")

    t0 = time.perf_counter()
    reference = solve(g, spec)
    exact_runtime = time.perf_counter() - t0

    stop = min(thresholds)
    run_args = [
        (g, spec, max_iter, base_seed + r, reference, stop) for r in range(runs)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            traces = list(pool.map(_one_mc_run, run_args))
    else:
        traces = [_one_mc_run(a) for a in run_args]

    results = []
    for thr in thresholds:
        times, iters, censored = [], [], 0
        for trace in traces:
            hit = trace.first_at_or_below(thr)
            if hit is None:
                censored += 1
                last_it, last_t = trace.rows[-1][0], trace.rows[-1][1]
                times.append(last_t)
                iters.append(float(last_it))
            else:
                times.append(hit[1])
                iters.append(float(hit[0]))
        mean_t = sum(times) / len(times)
        half_width = None
        if runs >= 2:
            var = sum((t - mean_t) ** 2 for t in times) / (runs - 1)
            half_width = _Z95 * math.sqrt(var / runs)
        results.append(
            ThresholdResult(
                threshold=thr,
                mean_time_s=mean_t,
                half_width_s=half_width,
                mean_iterations=sum(iters) / len(iters),
                censored_runs=censored,
                speedup=mean_t / exact_runtime if exact_runtime > 0 else math.inf,
            )
        )

    report = BenchReport(
        scenario=scenario,
        node_count=g.node_count,
        edge_count=g.edge_count,
        directed=g.directed,
        weighted=g.weighted,
        game=spec.game,
        runs=runs,
        max_iter=max_iter,
        exact_method=reference.method,
        exact_runtime_s=exact_runtime,
        results=tuple(results),
    )
    return report, traces
