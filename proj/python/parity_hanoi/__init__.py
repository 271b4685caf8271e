"""Four-peg Hanoi with parity-restricted pegs: counts, solver, state graphs."""

import json
from fractions import Fraction

from . import _core
from ._core import CapExceeded, Error, IllegalMove, Overflow

__all__ = [
    "CapExceeded",
    "Error",
    "IllegalMove",
    "Overflow",
    "bfs",
    "check_moves",
    "counts",
    "edges",
    "metrics",
    "ratios",
    "solve",
    "verify",
]


def counts(max_n, route="coupled"):
    """Columns h3, h4, a, b, c, d indexed by n. route: coupled, higher-order, closed-form."""
    return _core.counts(max_n, route)


def solve(task, n):
    """Moves for task 'a'..'d' as (disc, from_peg, to_peg)."""
    return _core.solve(task, n)


def check_moves(task, n, moves=None, oracle_cap=13):
    """Replay moves (default: the solver's) and check them; oracle_cap=-1 skips BFS."""
    return _core.check_moves(task, n, moves, oracle_cap)


def bfs(n, source, target, cap=13):
    """(distance, number of shortest paths) between two state words, or None."""
    return _core.bfs(n, source, target, cap)


def metrics(n):
    m = _core.metrics(n)
    m["average_degree"] = Fraction(*m["average_degree"])
    return m


def edges(n, classical=0):
    """Edges as pairs of state words; classical=3 or 4 gives the m-peg graph."""
    return _core.edges(n, classical)


def ratios(sequence, k_max):
    rows = _core.ratios(sequence, k_max)
    for r in rows:
        for key in ("even_over_odd", "odd_over_even", "limit_even_over_odd", "limit_odd_over_even"):
            r[key] = Fraction(*r[key])
    return rows


def verify(suite="all", n_max=10, oracle_cap=13):
    return json.loads(_core.run_verify(suite, n_max, oracle_cap))
