"""Brute-force Shapley ground truth via coalition enumeration.

Deliberately naive: every coalition is evaluated fresh through the
characteristic function, so this module stays an independent check on
the closed-form solvers.
"""
from __future__ import annotations

import math

from .exact import ShapleyVector
from .games import GameSpec, characteristic_value
from .graph import Graph, distance_matrix

DEFAULT_NODE_LIMIT = 16


class OracleSizeError(ValueError):
    """Graph too large for exhaustive enumeration."""


def brute_force_shapley(
    g: Graph, spec: GameSpec, node_limit: int = DEFAULT_NODE_LIMIT
) -> ShapleyVector:
    """Exact Shapley values from the factorial-weighted coalition sum.

    Refuses graphs above node_limit (default 16, override up to ~20 for
    patient runs); weights are formed from exact integer factorials.
    """
    n = g.node_count
    if n > node_limit:
        raise OracleSizeError(
            f"graph has {n} nodes, above the enumeration limit {node_limit}"
        )
    ctx = distance_matrix(g, "forward") if spec.game in ("g3", "g4") else None
    fact = [math.factorial(i) for i in range(n + 1)]
    weight = [fact[s] * fact[n - 1 - s] / fact[n] for s in range(n)]
    scores = []
    for i in range(n):
        others = [v for v in range(n) if v != i]
        total = 0.0
        for mask in range(1 << (n - 1)):
            coalition = [others[b] for b in range(n - 1) if mask >> b & 1]
            gain = characteristic_value(
                g, spec, coalition + [i], ctx
            ) - characteristic_value(g, spec, coalition, ctx)
            total += weight[len(coalition)] * gain
        scores.append(total)
    return ShapleyVector(tuple(scores), game=spec.game, method="brute_force")
