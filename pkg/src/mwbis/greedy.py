"""Greedy heuristics for budgeted independent sets.

``mbf`` (minimum budget first) is a ``d``-approximation for the unit-weight
problem on ``(d+1)``-claw-free graphs and a ``Δ``-approximation on graphs of
maximum degree ``Δ``. ``mwbrf`` is the natural weighted analogue and has no
bounded ratio at all; it exists to demonstrate exactly that.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .core import Instance, Solution, make_solution
from .errors import TooLargeForExactCheck, ValidationError

CLAW_CHECK_MAX_DEGREE = 20


class StopReason(str, Enum):
    EXHAUSTED = "Exhausted"
    BUDGET_SHORT = "BudgetShort"


@dataclass(frozen=True)
class GreedyTrace:
    order: tuple[int, ...]
    picks: tuple[int, ...]
    remaining: tuple[int, ...]  # budget left before each processed vertex
    stop_reason: StopReason

    def solution(self, inst: Instance) -> Solution:
        return make_solution(inst, self.picks)


def mbf(inst: Instance, keep_scanning: bool = False) -> GreedyTrace:
    """Scan vertices by nondecreasing budget (ties by id), taking each one
    that conflicts with no earlier pick.

    The scan stops at the first vertex whose budget exceeds what is left.
    ``keep_scanning=True`` is an extension that skips such a vertex instead;
    the approximation argument is only made for the stopping variant.
    """
    order = tuple(sorted(range(inst.n), key=lambda v: (inst.budget[v], v)))
    picks: list[int] = []
    taken: set[int] = set()
    remaining: list[int] = []
    left = inst.B
    for v in order:
        remaining.append(left)
        if left < inst.budget[v]:
            if keep_scanning:
                continue
            return GreedyTrace(order, tuple(picks), tuple(remaining), StopReason.BUDGET_SHORT)
        if not any(u in taken for u in inst.adjacency[v]):
            picks.append(v)
            taken.add(v)
            left -= inst.budget[v]
    return GreedyTrace(order, tuple(picks), tuple(remaining), StopReason.EXHAUSTED)


def mwbrf(inst: Instance) -> set[int]:
    """Maximum weight/budget ratio first.

    Warning: unbounded approximation ratio (a star with a cheap light center
    already defeats it). Use only to reproduce that negative result.
    """
    order = sorted(
        range(inst.n),
        key=lambda v: (-Fraction(inst.weight[v], inst.budget[v]), inst.budget[v], v),
    )
    chosen: set[int] = set()
    left = inst.B
    for v in order:
        if inst.budget[v] <= left and not any(u in chosen for u in inst.adjacency[v]):
            chosen.add(v)
            left -= inst.budget[v]
    return chosen


def _has_independent_subset(inst: Instance, cand: list[int], size: int) -> bool:
    """Backtracking search for ``size`` pairwise non-adjacent vertices in ``cand``."""
    if size <= 0:
        return True
    if len(cand) < size:
        return False
    first, rest = cand[0], cand[1:]
    nb = set(inst.adjacency[first])
    if _has_independent_subset(inst, [u for u in rest if u not in nb], size - 1):
        return True
    return _has_independent_subset(inst, rest, size)


def verify_claw_free(inst: Instance, d: int, cap: int = CLAW_CHECK_MAX_DEGREE) -> bool:
    """True iff no vertex has ``d + 1`` pairwise non-adjacent neighbors."""
    if d < 1:
        raise ValidationError(f"d={d} must be at least 1")
    for v in range(inst.n):
        nbrs = list(inst.adjacency[v])
        if len(nbrs) <= d:
            continue
        if len(nbrs) > cap:
            raise TooLargeForExactCheck(f"vertex {v} has degree {len(nbrs)} > {cap}")
        if _has_independent_subset(inst, nbrs, d + 1):
            return False
    return True


def claw_number(inst: Instance) -> int:
    """Largest number of pairwise non-adjacent neighbors of any vertex."""
    best = 0
    for v in range(inst.n):
        nbrs = list(inst.adjacency[v])
        for size in range(len(nbrs), best, -1):
            if any(
                all(b not in inst.adjacency[a] for a, b in combinations(sub, 2))
                for sub in combinations(nbrs, size)
            ):
                best = size
                break
    return best


def max_degree(inst: Instance) -> int:
    return max((len(a) for a in inst.adjacency), default=0)
