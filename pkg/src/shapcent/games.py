"""The five coalitional games and their characteristic functions.

Game tags:
  g1  one-hop fringe counting
  g2  k-threshold neighbor counting
  g3  distance-cutoff reach
  g4  decay-weighted proximity sum
  g5  weighted-threshold influence

Every characteristic function maps a node subset to a nonnegative real
and returns 0 for the empty coalition.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Collection, Mapping, Sequence

from .graph import Graph, shortest_paths

GAME_TAGS = ("g1", "g2", "g3", "g4", "g5")

INF = math.inf

# probe grid used to sanity-check custom decay functions
_DECAY_PROBE = (0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, INF)


class GameSpecError(ValueError):
    """Invalid game description or parameter map."""


def _inv_linear(d: float) -> float:
    return 1.0 / (1.0 + d)


def _inv_quadratic(d: float) -> float:
    return 1.0 / (1.0 + d * d)


def _exponential(d: float) -> float:
    return math.exp(-d)


def _step(d: float, c: float) -> float:
    return 1.0 if d <= c else 0.0


@dataclass(frozen=True)
class DecayFn:
    """Non-increasing nonnegative distance decay with f(+inf) = 0."""

    variant: str
    _fn: Callable[[float], float]

    def __call__(self, d: float) -> float:
        return self._fn(d)

    @staticmethod
    def inv_linear() -> "DecayFn":
        return DecayFn("inv_linear", _inv_linear)

    @staticmethod
    def inv_quadratic() -> "DecayFn":
        return DecayFn("inv_quadratic", _inv_quadratic)

    @staticmethod
    def exponential() -> "DecayFn":
        return DecayFn("exponential", _exponential)

    @staticmethod
    def step(c: float) -> "DecayFn":
        if not c > 0:
            raise GameSpecError(f"step threshold must be positive, got {c}")
        return DecayFn(f"step:{c:g}", functools.partial(_step, c=c))

    @staticmethod
    def custom(fn: Callable[[float], float], name: str = "custom") -> "DecayFn":
        vals = [fn(d) for d in _DECAY_PROBE]
        if not math.isfinite(vals[0]):
            raise GameSpecError("decay value at distance 0 must be finite")
        for v in vals:
            if v < 0:
                raise GameSpecError("decay function must be nonnegative")
        for a, b in zip(vals, vals[1:]):
            if b > a:
                raise GameSpecError("decay function must be non-increasing")
        if vals[-1] != 0.0:
            raise GameSpecError("decay function must vanish at +infinity")
        return DecayFn(name, fn)


@dataclass(frozen=True)
class GameSpec:
    """One of the five games plus its per-node parameters.

    Per-node maps may be given as a uniform scalar shorthand; they are
    broadcast over all nodes at evaluation time.
    """

    game: str
    k: Mapping[int, int] | int | None = None
    d_cutoff: Mapping[int, float] | float | None = None
    decay: DecayFn | None = None
    w_cutoff: Mapping[int, float] | float | None = None

    def __post_init__(self):
        if self.game not in GAME_TAGS:
            raise GameSpecError(f"unknown game tag {self.game!r}")
        needed = {"g2": self.k, "g3": self.d_cutoff, "g4": self.decay, "g5": self.w_cutoff}
        if self.game in needed and needed[self.game] is None:
            raise GameSpecError(f"game {self.game} requires its parameter")

    @staticmethod
    def fringe() -> "GameSpec":
        return GameSpec("g1")

    @staticmethod
    def threshold(k: Mapping[int, int] | int) -> "GameSpec":
        return GameSpec("g2", k=k)

    @staticmethod
    def cutoff(d_cutoff: Mapping[int, float] | float) -> "GameSpec":
        return GameSpec("g3", d_cutoff=d_cutoff)

    @staticmethod
    def proximity(decay: DecayFn) -> "GameSpec":
        return GameSpec("g4", decay=decay)

    @staticmethod
    def weighted_threshold(w_cutoff: Mapping[int, float] | float) -> "GameSpec":
        return GameSpec("g5", w_cutoff=w_cutoff)

    def k_values(self, g: Graph) -> list[int]:
        """Per-node k, range-checked against 1 <= k(v) <= 1 + deg(v)."""
        vals = _broadcast(self.k, g.node_count, "k")
        for v, kv in enumerate(vals):
            kv = int(kv)
            deg = g.degree(v, "in" if g.directed else "undirected")
            if not 1 <= kv <= 1 + deg:
                raise GameSpecError(
                    f"k({v}) = {kv} outside [1, {1 + deg}] for degree {deg}"
                )
            vals[v] = kv
        return vals

    def d_cutoff_values(self, g: Graph) -> list[float]:
        vals = _broadcast(self.d_cutoff, g.node_count, "d_cutoff")
        for v, c in enumerate(vals):
            if not c > 0:
                raise GameSpecError(f"d_cutoff({v}) must be positive, got {c}")
        return [float(c) for c in vals]

    def w_cutoff_values(self, g: Graph) -> list[float]:
        vals = _broadcast(self.w_cutoff, g.node_count, "w_cutoff")
        for v, c in enumerate(vals):
            if not c > 0:
                raise GameSpecError(f"w_cutoff({v}) must be positive, got {c}")
        return [float(c) for c in vals]


def _broadcast(param, n: int, name: str) -> list:
    if param is None:
        raise GameSpecError(f"missing parameter {name}")
    if isinstance(param, (int, float)):
        return [param] * n
    vals = []
    for v in range(n):
        if v not in param:
            raise GameSpecError(f"parameter map {name} missing node {v}")
        vals.append(param[v])
    return vals


def load_node_params(stream, integral: bool = False) -> dict[int, float] | dict[int, int]:
    """Parse "node,value" CSV lines into a per-node parameter map."""
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream
    out: dict = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise GameSpecError(f"line {lineno}: expected 'node,value': {line!r}")
        try:
            node = int(parts[0])
            val = int(parts[1]) if integral else float(parts[1])
        except ValueError:
            raise GameSpecError(f"line {lineno}: bad value: {line!r}") from None
        if node in out:
            raise GameSpecError(f"line {lineno}: duplicate node {node}")
        out[node] = val
    return out


def _check_coalition(g: Graph, coalition: Collection[int]) -> set[int]:
    members = set(coalition)
    for v in members:
        if not (0 <= v < g.node_count):
            raise GameSpecError(f"coalition contains invalid node id {v}")
    return members


def _min_distances(
    g: Graph, members: set[int], ctx: Sequence[Sequence[float]] | None
) -> list[float]:
    """Per-node minimum forward distance from the coalition."""
    best = [INF] * g.node_count
    for c in members:
        if ctx is not None:
            row = ctx[c]
            for v in range(g.node_count):
                if row[v] < best[v]:
                    best[v] = row[v]
        else:
            best[c] = 0.0
            for node, d in shortest_paths(g, c, "forward").entries:
                if d < best[node]:
                    best[node] = d
    return best


def characteristic_value(
    g: Graph,
    spec: GameSpec,
    coalition: Collection[int],
    ctx: Sequence[Sequence[float]] | None = None,
) -> float:
    """Evaluate the game's characteristic function on a coalition.

    ctx may carry a precomputed forward distance matrix (distance_matrix)
    to avoid repeated Dijkstra runs for g3/g4.
    """
    members = _check_coalition(g, coalition)
    if not members:
        return 0.0
    n = g.node_count

    if spec.game == "g1":
        covered = set(members)
        for c in members:
            for u, _ in g.out_neighbors(c):
                covered.add(u)
        return float(len(covered))

    if spec.game == "g2":
        k = spec.k_values(g)
        hits = [0] * n
        for c in members:
            for u, _ in g.out_neighbors(c):
                hits[u] += 1
        return float(
            sum(1 for v in range(n) if v in members or hits[v] >= k[v])
        )

    if spec.game == "g3":
        cut = spec.d_cutoff_values(g)
        best = _min_distances(g, members, ctx)
        return float(sum(1 for v in range(n) if best[v] <= cut[v]))

    if spec.game == "g4":
        f = spec.decay
        best = _min_distances(g, members, ctx)
        return float(sum(f(d) for d in best))

    # g5
    wc = spec.w_cutoff_values(g)
    acc = [0.0] * n
    for c in members:
        for u, w in g.out_neighbors(c):
            acc[u] += w
    return float(sum(1 for v in range(n) if v in members or acc[v] >= wc[v]))


def grand_value(g: Graph, spec: GameSpec) -> float:
    """Value of the grand coalition, nu(V)."""
    if spec.game in ("g1", "g2", "g3", "g5"):
        return float(g.node_count)
    return float(g.node_count) * spec.decay(0.0)
