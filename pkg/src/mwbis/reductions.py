"""0/1 knapsack as budgeted independent set on a star.

Each item becomes a leaf carrying (value, size) as (weight, budget). The
center costs ``capacity + 1`` so it can never be afforded, which makes the
leaves freely combinable and the two optima equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import CELL_GUARD, Instance
from .errors import CapacityGuardExceeded, NonPositiveBudget, ValidationError
from .tree import RootedTree, root_tree


@dataclass(frozen=True)
class KnapsackInstance:
    items: tuple[tuple[int, int], ...]  # (value, size)
    capacity: int

    def __post_init__(self):
        if self.capacity < 0:
            raise ValidationError(f"capacity {self.capacity} is negative")
        for k, (value, size) in enumerate(self.items):
            if size < 1:
                raise NonPositiveBudget(f"item {k} has size {size}")
            if value < 0:
                raise ValidationError(f"item {k} has negative value {value}")


def knapsack_to_star(kp: KnapsackInstance) -> RootedTree:
    """Center is vertex 0, item ``j`` is leaf ``j + 1``."""
    n = len(kp.items)
    inst = Instance.from_edges(
        [0] + [v for v, _ in kp.items],
        [kp.capacity + 1] + [s for _, s in kp.items],
        [(0, j) for j in range(1, n + 1)],
        kp.capacity,
    )
    return root_tree(inst, 0)


def solve_knapsack_dp(kp: KnapsackInstance, guard: int = CELL_GUARD) -> int:
    if (len(kp.items) + 1) * (kp.capacity + 1) > guard:
        raise CapacityGuardExceeded(f"capacity {kp.capacity} too large for the table guard")
    best = [0] * (kp.capacity + 1)
    for value, size in kp.items:
        for c in range(kp.capacity, size - 1, -1):
            if best[c - size] + value > best[c]:
                best[c] = best[c - size] + value
    return best[kp.capacity]


def items_from(values: Sequence[int], sizes: Sequence[int], capacity: int) -> KnapsackInstance:
    return KnapsackInstance(tuple(zip(values, sizes)), capacity)
