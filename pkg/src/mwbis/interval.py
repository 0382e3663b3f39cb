"""Exact MWBIS on interval graphs.

Intervals are closed but touching ends are compatible: ``I_m`` and ``I_j``
may both be chosen iff ``finish(I_m) <= start(I_j)`` (or vice versa).
Internally intervals are 1-indexed in nondecreasing finish order.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .core import Instance, Solution, check_cell_guard
from .errors import NonPositiveBudget, NegativeWeight, UnsortedInput, ValidationError


@dataclass(frozen=True)
class Interval:
    start: int
    finish: int
    weight: int
    budget: int


@dataclass(frozen=True)
class IntervalSet:
    """Intervals sorted by finish; ``ids[j]`` maps sorted slot j (0-based) to input order."""

    intervals: tuple[Interval, ...]
    ids: tuple[int, ...]
    pred: tuple[int, ...]

    @classmethod
    def from_intervals(cls, intervals: Sequence[Interval | tuple]) -> "IntervalSet":
        ivs = [iv if isinstance(iv, Interval) else Interval(*iv) for iv in intervals]
        for k, iv in enumerate(ivs):
            if not iv.start < iv.finish:
                raise ValidationError(f"interval {k} has start {iv.start} >= finish {iv.finish}")
            if iv.budget < 1:
                raise NonPositiveBudget(f"interval {k} has budget {iv.budget}")
            if iv.weight < 0:
                raise NegativeWeight(f"interval {k} has weight {iv.weight}")
        order = sorted(range(len(ivs)), key=lambda k: (ivs[k].finish, ivs[k].start, k))
        srt = tuple(ivs[k] for k in order)
        return cls(srt, tuple(order), tuple(compute_predecessors(srt)))

    def __len__(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class IntervalInstance:
    """Intervals in input order plus the global budget."""

    intervals: tuple[Interval, ...]
    B: int

    def interval_set(self) -> IntervalSet:
        return IntervalSet.from_intervals(self.intervals)

    def graph(self) -> Instance:
        return interval_graph(self.intervals, self.B)


def compute_predecessors(intervals: Sequence[Interval]) -> list[int]:
    """``l_j`` (1-based) = largest ``m < j`` with ``finish_m <= start_j``, else 0."""
    finishes = [iv.finish for iv in intervals]
    if any(a > b for a, b in zip(finishes, finishes[1:])):
        raise UnsortedInput("intervals must be sorted by nondecreasing finish")
    out = []
    for j, iv in enumerate(intervals):
        out.append(bisect_right(finishes, iv.start, 0, j))
    return out


def intersects(a: Interval, b: Interval) -> bool:
    return not (a.finish <= b.start or b.finish <= a.start)


def interval_graph(intervals: Sequence[Interval], B: int) -> Instance:
    """Intersection graph in input order, for checking against generic solvers."""
    edges = [
        (i, j)
        for i in range(len(intervals))
        for j in range(i + 1, len(intervals))
        if intersects(intervals[i], intervals[j])
    ]
    return Instance.from_edges(
        [iv.weight for iv in intervals], [iv.budget for iv in intervals], edges, B
    )


def fill_interval_table(iset: IntervalSet, B: int):
    """Row-major fill of ``w[j][t]`` and ``f[j][t]`` for ``j`` in 0..n, ``t`` in 0..B."""
    n = len(iset)
    check_cell_guard(n + 1, B)
    w = [[0] * (B + 1) for _ in range(n + 1)]
    f = [[0] * (B + 1) for _ in range(n + 1)]
    for j in range(1, n + 1):
        iv = iset.intervals[j - 1]
        lj = iset.pred[j - 1]
        prev, cur, flag = w[j - 1], w[j], f[j]
        for t in range(1, B + 1):
            cur[t] = prev[t]
            if t >= iv.budget:
                take = w[lj][t - iv.budget] + iv.weight
                if cur[t] < take:
                    cur[t] = take
                    flag[t] = 1
    return w, f


def solve_intervals(iset: IntervalSet, B: int) -> Solution:
    """Returned vertex ids refer to the caller's original interval order."""
    w, f = fill_interval_table(iset, B)
    chosen = []
    j, t = len(iset), B
    while t > 0 and j > 0:
        if f[j][t]:
            iv = iset.intervals[j - 1]
            chosen.append(j)
            t -= iv.budget
            j = iset.pred[j - 1]
        else:
            j -= 1
    picked = [iset.intervals[j - 1] for j in chosen]
    sol = Solution(
        tuple(sorted(iset.ids[j - 1] for j in chosen)),
        sum(iv.weight for iv in picked),
        sum(iv.budget for iv in picked),
    )
    assert sol.total_weight == w[len(iset)][B]
    return sol
