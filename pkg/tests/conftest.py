from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from shapcent import Graph, gen_gnp
from shapcent.games import GameSpec, characteristic_value

INF = math.inf


def floyd_warshall(g: Graph) -> list[list[float]]:
    """Independent all-pairs oracle: exhaustive relaxation over node triples."""
    n = g.node_count
    d = [[INF] * n for _ in range(n)]
    for v in range(n):
        d[v][v] = 0.0
    for u, v, w in g.edges:
        d[u][v] = min(d[u][v], w)
        if not g.directed:
            d[v][u] = min(d[v][u], w)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def permutation_shapley(g: Graph, spec: GameSpec) -> list[float]:
    """Average marginal contribution over every permutation (n! enumeration)."""
    n = g.node_count
    totals = [0.0] * n
    count = 0
    for perm in itertools.permutations(range(n)):
        prefix: list[int] = []
        before = 0.0
        for v in perm:
            after = characteristic_value(g, spec, prefix + [v])
            totals[v] += after - before
            prefix.append(v)
            before = after
        count += 1
    return [t / count for t in totals]


def random_small_graph(seed: int, n_max: int = 8, weighted: bool = True,
                       directed: bool | None = None) -> Graph:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, n_max + 1))
    p = float(rng.choice([0.3, 0.6]))
    if directed is None:
        directed = bool(rng.integers(0, 2))
    return gen_gnp(n, p, seed=seed + 10_000, weighted=weighted, directed=directed)


@pytest.fixture
def path3() -> Graph:
    return Graph.build(3, [(0, 1, 1.0), (1, 2, 1.0)])


@pytest.fixture
def star4() -> Graph:
    return Graph.build(4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)])
