"""Closed-form Shapley solvers for games g1-g4 and the Gaussian
approximation for g5.

All solvers are pure functions of immutable inputs. On directed graphs
"degree" means in-degree and the summation neighborhood is the set of
out-neighbors (influence flows along the edge direction).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .games import DecayFn, GameSpec, GameSpecError
from .graph import Graph, shortest_paths

INF = math.inf


@dataclass(frozen=True)
class ShapleyVector:
    """Per-node centrality scores for one (graph, game) pair."""

    scores: tuple[float, ...]
    game: str
    method: str  # exact | gaussian_approx | monte_carlo | brute_force

    def __len__(self) -> int:
        return len(self.scores)

    def to_csv(self, sep: str = ",") -> str:
        lines = [f"{v}{sep}{s:.12g}" for v, s in enumerate(self.scores)]
        return "\n".join(lines) + "\n"


def read_scores(stream, game: str = "g1", method: str = "exact") -> ShapleyVector:
    """Load a "node,score" CSV (as written by to_csv) into a ShapleyVector."""
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream
    pairs = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        node_s, score_s = line.replace("\t", ",").split(",")
        pairs.append((int(node_s), float(score_s)))
    pairs.sort()
    if [v for v, _ in pairs] != list(range(len(pairs))):
        raise ValueError("score file does not cover dense node ids")
    return ShapleyVector(tuple(s for _, s in pairs), game=game, method=method)


@dataclass(frozen=True)
class GaussianMoment:
    """Mean and variance of a subset-sum; sigma2 = 0 is deterministic."""

    mu: float
    sigma2: float

    def __post_init__(self):
        if self.sigma2 < 0:
            raise ValueError(f"negative variance {self.sigma2}")


def gaussian_interval_prob(m: GaussianMoment, lo: float, hi: float) -> float:
    """P{X in [lo, hi)} for X ~ N(mu, sigma2).

    The degenerate sigma2 = 0 case keeps the half-open interval semantics
    of the g5 contribution condition.
    """
    if lo > hi:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    if m.sigma2 == 0.0:
        return 1.0 if lo <= m.mu < hi else 0.0
    s = math.sqrt(2.0 * m.sigma2)
    a = math.erf((lo - m.mu) / s) if lo != -INF else -1.0
    b = math.erf((hi - m.mu) / s) if hi != INF else 1.0
    return max(0.0, 0.5 * (b - a))


def _inf_degrees(g: Graph) -> list[int]:
    mode = "in" if g.directed else "undirected"
    return [g.degree(v, mode) for v in range(g.node_count)]


def _sum_neighbors(g: Graph, v: int):
    return g.out_neighbors(v)


def shapley_g1(g: Graph) -> ShapleyVector:
    """Exact Shapley values for the one-hop fringe game, O(V + E)."""
    deg = _inf_degrees(g)
    inv = [1.0 / (1.0 + d) for d in deg]
    scores = []
    for v in range(g.node_count):
        # fsum keeps the result independent of adjacency order, so the
        # g2(k=1) and g3(unit weights) reductions hold bit-for-bit
        scores.append(math.fsum([inv[v]] + [inv[u] for u, _ in _sum_neighbors(g, v)]))
    return ShapleyVector(tuple(scores), game="g1", method="exact")


def shapley_g2(g: Graph, k) -> ShapleyVector:
    """Exact Shapley values for the k-threshold game, O(V + E).

    k is a uniform int or a per-node map with 1 <= k(v) <= 1 + deg(v).
    """
    spec = GameSpec.threshold(k)
    kv = spec.k_values(g)
    deg = _inf_degrees(g)
    scores = []
    for v in range(g.node_count):
        terms = [min(1.0, kv[v] / (1.0 + deg[v]))]
        for u, _ in _sum_neighbors(g, v):
            if deg[u] > 0:
                terms.append(max(0.0, (deg[u] - kv[u] + 1.0) / (deg[u] * (1.0 + deg[u]))))
        scores.append(math.fsum(terms))
    return ShapleyVector(tuple(scores), game="g2", method="exact")


def shapley_g3(g: Graph, d_cutoff) -> ShapleyVector:
    """Exact Shapley values for the distance-cutoff game.

    d_cutoff is a uniform positive real or a per-node map; the cutoff of
    the *covered* node decides membership.
    """
    spec = GameSpec.cutoff(d_cutoff)
    cut = spec.d_cutoff_values(g)
    n = g.node_count
    ext_degree = [0] * n
    covers: list[list[int]] = [[] for _ in range(n)]
    for src in range(n):
        for node, d in shortest_paths(g, src, "forward").entries:
            if d <= cut[node]:
                covers[src].append(node)
                ext_degree[node] += 1
    scores = []
    for v in range(n):
        terms = [1.0 / (1.0 + ext_degree[v])]
        terms.extend(1.0 / (1.0 + ext_degree[u]) for u in covers[v])
        scores.append(math.fsum(terms))
    return ShapleyVector(tuple(scores), game="g3", method="exact")


def shapley_g4(g: Graph, f: DecayFn) -> ShapleyVector:
    """Exact Shapley values for the decay-weighted proximity game.

    Each node's pass sorts the other nodes by their distance *to* it
    (reverse orientation on directed graphs) and accumulates expected
    marginal contributions with a backward cumulative sum; equal-distance
    nodes share one value.
    """
    if not isinstance(f, DecayFn):
        f = DecayFn.custom(f)
    n = g.node_count
    scores = [0.0] * n
    orientation = "reverse" if g.directed else "forward"
    for target in range(n):
        entries = shortest_paths(g, target, orientation).entries
        acc = 0.0
        prev_d: float | None = None
        prev_sv = 0.0
        for index in range(n - 1, 0, -1):
            node, d = entries[index - 1]
            fd = f(d)
            if prev_d is not None and d == prev_d:
                curr = prev_sv
            else:
                curr = fd / (1.0 + index) - acc
            scores[node] += curr
            acc += fd / (index * (1.0 + index))
            prev_d, prev_sv = d, curr
        scores[target] += f(0.0) - acc
    return ShapleyVector(tuple(scores), game="g4", method="exact")


def shapley_g5(g: Graph, w_cutoff, brute_force_degree_limit: int = 12) -> ShapleyVector:
    """Approximate Shapley values for the weighted-threshold game.

    High-degree neighbors use the Gaussian subset-sum approximation;
    neighbors with degree <= brute_force_degree_limit (and all degenerate
    degree-1/2 cases) are enumerated exactly.
    """
    if brute_force_degree_limit < 2:
        raise GameSpecError(
            "brute_force_degree_limit must be >= 2 (degenerate moments need exactness)"
        )
    spec = GameSpec.weighted_threshold(w_cutoff)
    wc = spec.w_cutoff_values(g)
    n = g.node_count
    # influence arrives along in-edges; the summation set is out-neighbors
    in_adj = [g.in_neighbors(v) if g.directed else g.out_neighbors(v) for v in range(n)]
    alpha = [sum(w for _, w in adj) for adj in in_adj]
    beta = [sum(w * w for _, w in adj) for adj in in_adj]
    deg = [len(adj) for adj in in_adj]

    def cross_term(vi: int, vj: int, wij: float) -> float:
        d = deg[vj]
        lo = wc[vj] - wij
        hi = wc[vj]
        if d <= brute_force_degree_limit:
            others = [w for u, w in in_adj[vj] if u != vi]
            factor = [
                (d - m) / (d * (d + 1.0)) / math.comb(d - 1, m)
                for m in range(d)
            ]
            total = 0.0
            for m in range(d):
                for subset in combinations(others, m):
                    if lo <= sum(subset) < hi:
                        total += factor[m]
            return total
        a = alpha[vj] - wij
        b = beta[vj] - wij * wij
        spread = b - a * a / (d - 1.0)
        total = 0.0
        for m in range(d):
            pr = (d - m) / (d * (d + 1.0))
            if m == 0:
                mom = GaussianMoment(0.0, 0.0)
            elif m == d - 1:
                mom = GaussianMoment(a, 0.0)
            else:
                mu = m / (d - 1.0) * a
                var = m * (d - 1.0 - m) / ((d - 1.0) * (d - 2.0)) * spread
                mom = GaussianMoment(mu, max(0.0, var))
            total += pr * gaussian_interval_prob(mom, lo, hi)
        return total

    def self_term(vi: int) -> float:
        d = deg[vi]
        if d == 0:
            return 1.0
        if d <= brute_force_degree_limit:
            weights = [w for _, w in in_adj[vi]]
            total = 0.0
            for m in range(d + 1):
                q = 1.0 / math.comb(d, m)
                for subset in combinations(weights, m):
                    if sum(subset) < wc[vi]:
                        total += q
            return total / (1.0 + d)
        spread = beta[vi] - alpha[vi] * alpha[vi] / d
        total = 0.0
        for m in range(d + 1):
            if m == 0:
                mom = GaussianMoment(0.0, 0.0)
            elif m == d:
                mom = GaussianMoment(alpha[vi], 0.0)
            else:
                mu = m / d * alpha[vi]
                var = m * (d - m) / (d * (d - 1.0)) * spread
                mom = GaussianMoment(mu, max(0.0, var))
            total += gaussian_interval_prob(mom, -INF, wc[vi])
        return total / (1.0 + d)

    scores = []
    for vi in range(n):
        s = self_term(vi)
        for vj, wij in _sum_neighbors(g, vi):
            s += cross_term(vi, vj, wij)
        scores.append(s)
    return ShapleyVector(tuple(scores), game="g5", method="gaussian_approx")


def solve(g: Graph, spec: GameSpec, brute_force_degree_limit: int = 12) -> ShapleyVector:
    """Dispatch to the closed-form solver for the spec's game."""
    if spec.game == "g1":
        return shapley_g1(g)
    if spec.game == "g2":
        return shapley_g2(g, spec.k)
    if spec.game == "g3":
        return shapley_g3(g, spec.d_cutoff)
    if spec.game == "g4":
        return shapley_g4(g, spec.decay)
    return shapley_g5(g, spec.w_cutoff, brute_force_degree_limit)
