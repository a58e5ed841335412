"""Generalised L(2,1) labelings and label arithmetic.

A labeling is a plain ``dict`` mapping vertex -> nonnegative label.  A
``(k-1)``-labeling of an :class:`Instance` uses labels ``0..k-1``, never puts
label 0 on a vertex of ``z`` and never puts the top label ``k-1`` on a vertex
of ``m``.  Adjacent vertices need labels at least 2 apart and vertices at
distance two need distinct labels; distances are always taken in the whole
graph, not in the subgraph induced by ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, members, to_mask

Labeling = dict[int, int]


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    """Graph plus the three vertex roles, all as bitmasks.

    ``z`` and ``m`` need not be subsets of ``y``.
    """

    g: Graph
    y: int
    z: int = 0
    m: int = 0

    @classmethod
    def of(cls, g: Graph, y=None, z=(), m=()) -> "Instance":
        """Build from iterables of vertices; ``y`` defaults to every vertex."""
        y_mask = g.vertex_mask if y is None else to_mask(y)
        return cls(g, y_mask, to_mask(z), to_mask(m))

    def __post_init__(self):
        full = self.g.vertex_mask
        for name in ("y", "z", "m"):
            if getattr(self, name) & ~full:
                raise ValueError(f"{name} contains vertices outside the graph")

    def swapped(self) -> "Instance":
        return Instance(self.g, self.y, self.m, self.z)


def first_violation(inst: Instance, c: Labeling, k: int) -> str | None:
    """Describe the first broken constraint, or return None if ``c`` is valid."""
    if k == 0 and not inst.y and not c:
        return None
    if k < 1:
        return f"k must be at least 1, got {k}"
    if to_mask(v for v in c if 0 <= v < inst.g.n) != inst.y or len(c) != inst.y.bit_count():
        return "labeling domain differs from the vertex set to label"
    for v in members(inst.y):
        label = c[v]
        if not 0 <= label <= k - 1:
            return f"vertex {v} has label {label} outside 0..{k - 1}"
        if label == 0 and inst.z >> v & 1:
            return f"vertex {v} may not take label 0"
        if label == k - 1 and inst.m >> v & 1:
            return f"vertex {v} may not take the top label {k - 1}"
    adj = inst.g.adjacency
    sq = inst.g.square_adjacency
    for u in members(inst.y):
        for v in members(sq[u] & inst.y):
            if v <= u:
                continue
            gap = abs(c[u] - c[v])
            if adj[u] >> v & 1:
                if gap < 2:
                    return f"adjacent vertices {u} and {v} have labels {c[u]} and {c[v]}"
            elif gap < 1:
                return f"vertices {u} and {v} at distance 2 share label {c[u]}"
    return None


def is_valid_labeling(inst: Instance, c: Labeling, k: int) -> bool:
    """True iff ``c`` is a ``(k-1)``-labeling of ``inst``.  Never raises."""
    try:
        return first_violation(inst, c, k) is None
    except (TypeError, KeyError):
        return False


def span_of(c: Labeling) -> int:
    if not c:
        raise LabelingError("span of an empty labeling is undefined")
    return max(c.values())


def shift(c: Labeling, d: int) -> Labeling:
    out = {v: label + d for v, label in c.items()}
    if any(label < 0 for label in out.values()):
        raise LabelingError(f"shifting by {d} produces a negative label")
    return out


def reverse(c: Labeling, k: int) -> Labeling:
    """Mirror labels inside ``0..k-1``: label ``x`` becomes ``k-1-x``."""
    if any(not 0 <= label <= k - 1 for label in c.values()):
        raise LabelingError(f"labels must lie in 0..{k - 1} to reverse")
    return {v: k - 1 - label for v, label in c.items()}


def restrict(c: Labeling, mask: int) -> Labeling:
    return {v: label for v, label in c.items() if mask >> v & 1}
