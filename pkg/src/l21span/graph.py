"""Undirected simple graphs with a cached distance-2 relation.

Vertex subsets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v``
is a member.  Every hot path in the solver is subset algebra, so masks are
passed around directly rather than wrapped in a set class.
"""

from __future__ import annotations

import random
from functools import cached_property
from typing import Iterable, Iterator

DEFAULT_MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or query."""


def members(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int)
        Edge list.  Self-loops and repeated edges raise :class:`GraphError`.
    max_vertices : int
        Width of the vertex bitsets.  Anything above a few dozen vertices
        is out of reach for the exact algorithms anyway.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), *,
                 max_vertices: int = DEFAULT_MAX_VERTICES):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        if n > max_vertices:
            raise GraphError(f"{n} vertices exceeds the configured maximum of {max_vertices}")
        self.n = n
        self.max_vertices = max_vertices
        adj = [0] * n
        seen = []
        for u, v in edges:
            self._check_vertex(u)
            self._check_vertex(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge {u} {v}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            seen.append((min(u, v), max(u, v)))
        self.adjacency: tuple[int, ...] = tuple(adj)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def square_adjacency(self) -> tuple[int, ...]:
        """Per-vertex masks of the vertices at distance 1 or 2 (self excluded)."""
        adj = self.adjacency
        sq = []
        for v in range(self.n):
            reach = adj[v]
            for u in members(adj[v]):
                reach |= adj[u]
            sq.append(reach & ~(1 << v))
        return tuple(sq)

    def degree(self, v: int) -> int:
        return popcount(self.adjacency[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def neighborhood(self, mask: int) -> int:
        """Open neighbourhood N(X) of a vertex set, in the whole graph."""
        out = 0
        for v in members(mask):
            out |= self.adjacency[v]
        return out

    def is_adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adjacency[u] >> v & 1)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        reached = frontier = 1
        while frontier:
            frontier = self.neighborhood(frontier) & ~reached
            reached |= frontier
        return reached == self.vertex_mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def square(g: Graph) -> Graph:
    """Graph on the same vertices joining every pair at distance <= 2."""
    sq = g.square_adjacency
    edges = [(u, v) for u in range(g.n) for v in members(sq[u]) if u < v]
    return Graph(g.n, edges, max_vertices=g.max_vertices)


def dist_le2(g: Graph, u: int, v: int) -> bool:
    g._check_vertex(u)
    g._check_vertex(v)
    return bool(g.square_adjacency[u] >> v & 1)


def is_2packing(g: Graph, x: int) -> bool:
    """True iff the vertices of ``x`` are pairwise at distance > 2 in ``g``."""
    sq = g.square_adjacency
    for v in members(x):
        if sq[v] & x:
            return False
    return True


# -- generators --------------------------------------------------------------

FAMILIES = ("path", "cycle", "complete", "star", "petersen", "gnp")


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices: centre 0 joined to ``n - 1`` leaves."""
    return Graph(n, [(0, v) for v in range(1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def gnp_graph(n: int, p: float, seed: int = 0) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def generate(family: str, n: int | None = None, p: float = 0.5, seed: int = 0) -> Graph:
    """Build a graph from one of :data:`FAMILIES`.

    ``n`` is ignored for ``petersen``; ``star`` with ``n`` vertices is K_{1,n-1}.
    """
    if family == "petersen":
        return petersen_graph()
    if family not in FAMILIES:
        raise GraphError(f"unknown graph family {family!r}")
    if n is None or n < 1:
        raise GraphError(f"family {family!r} needs n >= 1, got {n}")
    if family == "path":
        return path_graph(n)
    if family == "cycle":
        return cycle_graph(n)
    if family == "complete":
        return complete_graph(n)
    if family == "star":
        return star_graph(n)
    return gnp_graph(n, p, seed)
