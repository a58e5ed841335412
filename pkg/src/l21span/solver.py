"""Divide-and-conquer computation of the generalised L(2,1) span.

``find_lambda`` computes the minimum number of labels ``k`` such that the
vertices ``y`` can be labelled from ``0..k-1`` with label 0 avoided on ``z``,
label ``k-1`` avoided on ``m`` and the usual distance-1/distance-2
separations.  When three labels do not suffice, ``y`` is split into
``(A, X, B)`` where ``X`` is a nonempty 2-packing and both ``A`` and ``B``
hold at most half of ``y``.  ``X`` takes a single label that separates the
labels of ``A`` (below) from those of ``B`` (above), so the two halves are
solved independently with ``N(X)`` as their shared boundary.

The recursion keeps no table keyed by vertex subsets: memory is a constant
number of bitmasks per active call plus, optionally, the labelings being
composed.  ``RunStats.peak_aux`` tracks that state explicitly.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .graph import Graph, members
from .labeling import Instance, Labeling

# aux-state accounting, in machine words
FRAME_MASKS = 12          # y, z, m, a, x, b, N(x), rest, submask, bounds, ...
PACKING_LEVEL_MASKS = 3   # candidate set, partial packing, generator
LABEL_ENTRY_WORDS = 2     # one (vertex, label) pair
# documented bound: peak_aux <= AUX_COEFF * n**2 * (active recursion levels)
AUX_COEFF = 32


class CorrectPartition(NamedTuple):
    a: int
    x: int
    b: int


@dataclass
class RunStats:
    nodes: int = 0
    max_depth: int = 0
    partitions: int = 0
    base_case_labelings: int = 0
    peak_aux: int = 0

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "max_depth": self.max_depth,
            "partitions": self.partitions,
            "base_case_labelings": self.base_case_labelings,
            "peak_aux": self.peak_aux,
        }


@dataclass
class SolverOptions:
    """Knobs that never change the computed value.

    prune
        Branch-and-bound: skip partitions that cannot beat the best value
        found so far and pass that value down as a cutoff.
    collect_certificate
        Compose an optimal labeling alongside the value.
    track_aux
        Maintain ``RunStats.peak_aux``.  Off saves a little bookkeeping.
    timeout
        Seconds before :class:`SolverTimeout` is raised.  Checked between
        partition iterations.
    """

    prune: bool = False
    collect_certificate: bool = False
    track_aux: bool = True
    timeout: float | None = None


class SolverTimeout(RuntimeError):
    def __init__(self, stats: RunStats):
        super().__init__("time limit reached")
        self.stats = stats


@dataclass
class SpanResult:
    value: int
    stats: RunStats
    labeling: Labeling | None = None


def kx_value(a_empty: bool, b_empty: bool, x_meets_z: bool, x_meets_m: bool) -> int:
    """Number of labels charged to the separator ``X``.

    An extra, unused label is needed when ``X`` sits at the bottom of the
    range but touches ``z`` (it cannot take 0), or at the top and touches
    ``m``.
    """
    assert not (a_empty and b_empty), "A and B cannot both be empty here"
    if not a_empty and not b_empty:
        return 1
    if a_empty:
        return 2 if x_meets_z else 1
    return 2 if x_meets_m else 1


def _packings(cand: int, sq: tuple[int, ...]) -> Iterator[int]:
    # every nonempty 2-packing inside cand, each once (grown from its lowest vertex)
    while cand:
        low = cand & -cand
        cand ^= low
        yield low
        rest = cand & ~sq[low.bit_length() - 1]
        for more in _packings(rest, sq):
            yield low | more


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


def enumerate_correct_partitions(inst: Instance) -> Iterator[CorrectPartition]:
    """Every ``(A, X, B)`` split of ``inst.y`` with ``X`` a nonempty 2-packing
    and ``|A|, |B| <= |y| // 2``, each exactly once, in a fixed order."""
    y = inst.y
    half = y.bit_count() // 2
    for x in _packings(y, inst.g.square_adjacency):
        rest = y & ~x
        r = rest.bit_count()
        if r - half > half:
            continue
        for a in _submasks(rest):
            size = a.bit_count()
            if r - half <= size <= half:
                yield CorrectPartition(a, x, rest & ~a)


class _Search:
    def __init__(self, g: Graph, opts: SolverOptions):
        self.g = g
        self.adj = g.adjacency
        self.sq = g.square_adjacency
        self.opts = opts
        self.stats = RunStats()
        self.deadline = None if opts.timeout is None else time.monotonic() + opts.timeout
        self.mask_words = max(1, math.ceil(g.n / 64))
        self.live = 0

    # -- instrumentation

    def _hold(self, words: int) -> None:
        if self.opts.track_aux:
            self.live += words
            if self.live > self.stats.peak_aux:
                self.stats.peak_aux = self.live

    def _release(self, words: int) -> None:
        if self.opts.track_aux:
            self.live -= words

    def _check_deadline(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SolverTimeout(self.stats)

    # -- base case

    def base_case(self, y: int, z: int, m: int) -> tuple[int, Labeling] | None:
        """Smallest k <= 3 admitting a labeling, by exhaustive search."""
        vs = list(members(y))
        adj, sq = self.adj, self.sq
        stats = self.stats
        labels: Labeling = {}

        def assign(i, k):
            if i == len(vs):
                return True
            v = vs[i]
            for label in range(k):
                stats.base_case_labelings += 1
                if label == 0 and z >> v & 1:
                    continue
                if label == k - 1 and m >> v & 1:
                    continue
                clash = False
                for u in members(sq[v] & y):
                    if u in labels:
                        gap = abs(labels[u] - label)
                        if gap == 0 or (gap == 1 and adj[v] >> u & 1):
                            clash = True
                            break
                if clash:
                    continue
                labels[v] = label
                if assign(i + 1, k):
                    return True
                del labels[v]
            return False

        scratch = LABEL_ENTRY_WORDS * len(vs)
        self._hold(scratch)
        try:
            for k in (1, 2, 3):
                if assign(0, k):
                    return k, labels
            return None
        finally:
            self._release(scratch)

    # -- recursion

    def solve(self, y: int, z: int, m: int, depth: int, cutoff: float) -> tuple[int, Labeling | None]:
        """Exact value when it is below ``cutoff``, else some value >= ``cutoff``."""
        stats = self.stats
        stats.nodes += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        if not y:
            return 0, {}
        frame = FRAME_MASKS * self.mask_words
        self._hold(frame)
        try:
            return self._solve_nonempty(y, z, m, depth, cutoff)
        finally:
            self._release(frame)

    def _solve_nonempty(self, y, z, m, depth, cutoff):
        base = self.base_case(y, z, m)
        if base is not None:
            k, labels = base
            return k, dict(labels) if self.opts.collect_certificate else None
        prune = self.opts.prune
        # more than 3 labels are needed from here on
        if prune and cutoff <= 4:
            return 4, None
        self._check_deadline()

        certify = self.opts.collect_certificate
        best = cutoff if prune else math.inf
        best_labels: Labeling | None = None
        held_labels = 0
        half = y.bit_count() // 2
        level = PACKING_LEVEL_MASKS * self.mask_words

        for x in self._tracked_packings(y, level):
            rest = y & ~x
            r = rest.bit_count()
            if r - half > half:
                continue
            nx = self.g.neighborhood(x)
            x_meets_z = bool(x & z)
            x_meets_m = bool(x & m)
            for a in _submasks(rest):
                size = a.bit_count()
                if not r - half <= size <= half:
                    continue
                b = rest & ~a
                self.stats.partitions += 1
                self._check_deadline()
                kx = kx_value(not a, not b, x_meets_z, x_meets_m)
                if prune:
                    lb_a = 1 if a else 0
                    lb_b = 1 if b else 0
                    if lb_a + kx + lb_b >= best:
                        continue
                    ka, ca = self.solve(a, z, nx, depth + 1, best - kx - lb_b)
                    if ka + kx + lb_b >= best:
                        continue
                    kb, cb = self.solve(b, nx, m, depth + 1, best - ka - kx)
                else:
                    ka, ca = self.solve(a, z, nx, depth + 1, math.inf)
                    kb, cb = self.solve(b, nx, m, depth + 1, math.inf)
                total = ka + kx + kb
                if total < best:
                    best = total
                    if certify:
                        self._release(held_labels)
                        best_labels = compose(ca, x, cb, ka, bool(x & z))
                        held_labels = LABEL_ENTRY_WORDS * len(best_labels)
                        self._hold(held_labels)
                    if prune and best == 4:
                        break
            if prune and best == 4:
                break
        self._release(held_labels)
        return best, best_labels

    def _tracked_packings(self, y, level):
        # _packings with the live generator depth charged to aux state
        sq = self.sq

        def walk(cand):
            self._hold(level)
            try:
                while cand:
                    low = cand & -cand
                    cand ^= low
                    yield low
                    rest = cand & ~sq[low.bit_length() - 1]
                    for more in walk(rest):
                        yield low | more
            finally:
                self._release(level)

        return walk(y)


def compose(ca: Labeling, x: int, cb: Labeling, ka: int, x_meets_z: bool) -> Labeling:
    """Join optimal labelings of ``A`` and ``B`` around the separator ``X``.

    With ``A`` nonempty, ``A`` keeps its labels, ``X`` takes ``ka`` and ``B``
    sits above from ``ka + 1``.  With ``A`` empty, ``X`` takes the lowest label
    it may use (0, or 1 when it meets ``z``) and ``B`` starts right above it.
    With ``B`` empty a top label may be left unused when ``X`` meets ``m``;
    the caller's count already includes it.
    """
    out = dict(ca)
    if ca:
        x_label = ka
    else:
        x_label = 1 if x_meets_z else 0
    for v in members(x):
        out[v] = x_label
    for v, label in cb.items():
        out[v] = label + x_label + 1
    return out


def base_case_span(inst: Instance) -> int | None:
    """Smallest k in {0, 1, 2, 3} with a labeling of ``inst``, else None."""
    if not inst.y:
        return 0
    found = _Search(inst.g, SolverOptions(track_aux=False)).base_case(inst.y, inst.z, inst.m)
    return None if found is None else found[0]


def _run(inst: Instance, opts: SolverOptions) -> SpanResult:
    search = _Search(inst.g, opts)
    value, labels = search.solve(inst.y, inst.z, inst.m, 1, math.inf)
    assert search.live == 0
    return SpanResult(value, search.stats, labels if opts.collect_certificate else None)


def find_lambda(inst: Instance, opts: SolverOptions | None = None) -> tuple[int, RunStats]:
    """Minimum number of labels for ``inst``, with run statistics."""
    res = _run(inst, opts or SolverOptions())
    return res.value, res.stats


def find_labeling(inst: Instance, opts: SolverOptions | None = None) -> tuple[int, Labeling]:
    """Minimum number of labels together with a labeling that attains it."""
    opts = opts or SolverOptions()
    res = _run(inst, SolverOptions(prune=opts.prune, collect_certificate=True,
                                   track_aux=opts.track_aux, timeout=opts.timeout))
    return res.value, res.labeling


def lambda_span(g: Graph, opts: SolverOptions | None = None) -> tuple[int, RunStats]:
    """lambda(g); -1 for the graph with no vertices."""
    value, stats = find_lambda(Instance(g, g.vertex_mask), opts)
    return value - 1, stats


def solve_span(g: Graph, opts: SolverOptions | None = None) -> SpanResult:
    """lambda(g) with stats and, if requested, an optimal labeling."""
    res = _run(Instance(g, g.vertex_mask), opts or SolverOptions())
    res.value -= 1
    return res
