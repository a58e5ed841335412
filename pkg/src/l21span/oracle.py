"""Brute-force reference values for the generalised span.

Nothing here shares code with :mod:`l21span.solver`; the two are compared in
the test-suite.  :func:`oracle_decide` is a plain backtracking search and
:func:`exhaustive_lambda` is an even dumber enumeration of every label vector,
used to check the backtracking search itself on tiny graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, members
from .labeling import Instance


class BudgetExceeded(RuntimeError):
    """The search ran out of budget; the answer is unknown, not false."""


@dataclass(frozen=True)
class OracleBudget:
    max_k: int | None = None
    node_limit: int | None = None

    def __post_init__(self):
        for name in ("max_k", "node_limit"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive when given")


UNLIMITED = OracleBudget()


def search_order(inst: Instance) -> list[int]:
    # fail-first: most constrained vertices (by square degree) first
    sq = inst.g.square_adjacency
    return sorted(members(inst.y), key=lambda v: (-sq[v].bit_count(), v))


def oracle_decide(inst: Instance, k: int, budget: OracleBudget = UNLIMITED) -> bool:
    """Does a labeling of ``inst.y`` with labels ``0..k-1`` exist?"""
    if k < 1:
        raise ValueError("k must be at least 1")
    order = search_order(inst)
    g = inst.g
    adj, sq = g.adjacency, g.square_adjacency
    labels = [-1] * g.n
    nodes = 0
    limit = budget.node_limit

    def candidates(v):
        lo = 1 if inst.z >> v & 1 else 0
        hi = k - 2 if inst.m >> v & 1 else k - 1
        return range(lo, hi + 1)

    def extend(i):
        nonlocal nodes
        nodes += 1
        if limit is not None and nodes > limit:
            raise BudgetExceeded(f"node limit {limit} exhausted at k={k}")
        if i == len(order):
            return True
        v = order[i]
        close = [u for u in members(sq[v]) if labels[u] >= 0]
        for label in candidates(v):
            ok = True
            for u in close:
                gap = abs(labels[u] - label)
                if gap == 0 or (gap == 1 and adj[v] >> u & 1):
                    ok = False
                    break
            if ok:
                labels[v] = label
                if extend(i + 1):
                    return True
                labels[v] = -1
        return False

    return extend(0)


def oracle_lambda(inst: Instance, budget: OracleBudget = UNLIMITED) -> int:
    """Smallest number of labels admitting a labeling of ``inst``.

    Scans ``k`` upward one at a time.
    """
    if not inst.y:
        return 0
    bound = 2 * inst.y.bit_count() + 2
    for k in range(1, bound + 1):
        if budget.max_k is not None and k > budget.max_k:
            raise BudgetExceeded(f"no labeling with at most {budget.max_k} labels")
        if oracle_decide(inst, k, budget):
            return k
    raise AssertionError(f"no labeling found below the bound {bound}")


def oracle_span(g: Graph, budget: OracleBudget = UNLIMITED) -> int:
    """lambda(g), the classical L(2,1) span."""
    return oracle_lambda(Instance(g, g.vertex_mask), budget) - 1


def _bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for w in members(g.adjacency[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def _satisfies(inst: Instance, labels: dict[int, int], k: int, dist) -> bool:
    for v, label in labels.items():
        if label == 0 and inst.z >> v & 1:
            return False
        if label == k - 1 and inst.m >> v & 1:
            return False
    for u, v in itertools.combinations(labels, 2):
        gap = abs(labels[u] - labels[v])
        d = dist[u].get(v)
        if d == 1 and gap < 2:
            return False
        if d == 2 and gap == 0:
            return False
    return True


def exhaustive_lambda(inst: Instance) -> int:
    """Same quantity as :func:`oracle_lambda` by trying every label vector.

    Only usable for a handful of vertices.  Distances come from a fresh BFS
    rather than the graph's cached square.
    """
    ys = list(members(inst.y))
    if not ys:
        return 0
    dist = {v: _bfs_distances(inst.g, v) for v in ys}
    k = 1
    while True:
        for combo in itertools.product(range(k), repeat=len(ys)):
            if _satisfies(inst, dict(zip(ys, combo)), k, dist):
                return k
        k += 1


def exhaustive_span(g: Graph) -> int:
    return exhaustive_lambda(Instance(g, g.vertex_mask)) - 1


def brute_force_partitions(g: Graph, y: int) -> list[tuple[int, int, int]]:
    """All (A, X, B) triples over ``y`` passing the three partition rules,
    found by assigning each vertex of ``y`` to A, X or B in every possible way."""
    ys = list(members(y))
    half = len(ys) / 2
    sq = g.square_adjacency
    found = []
    for roles in itertools.product(range(3), repeat=len(ys)):
        parts = [0, 0, 0]
        for v, role in zip(ys, roles):
            parts[role] |= 1 << v
        a, x, b = parts
        if not x or a.bit_count() > half or b.bit_count() > half:
            continue
        if any(sq[u] >> v & 1 for u, v in itertools.combinations(members(x), 2)):
            continue
        found.append((a, x, b))
    return found
