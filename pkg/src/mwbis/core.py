"""Instance model, solution certification and the exhaustive oracle.

Weights are stored as nonnegative integers in milli-units so that every
solver can be compared against the oracle with exact equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AsymmetricAdjacency,
    BudgetGuardExceeded,
    InstanceTooLarge,
    NegativeWeight,
    NonPositiveBudget,
    SelfLoop,
    ValidationError,
    VertexOutOfRange,
)

ORACLE_MAX_N = 22
CELL_GUARD = 10**8


def to_milli(x) -> int:
    """Scale a real weight to integer milli-units (round half even)."""
    return int((Decimal(str(x)) * 1000).to_integral_value())


@dataclass(frozen=True)
class Instance:
    """Undirected graph with per-vertex weight and budget and a global cap ``B``."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    weight: tuple[int, ...]
    budget: tuple[int, ...]
    B: int

    @classmethod
    def from_edges(
        cls,
        weight: Sequence[int],
        budget: Sequence[int],
        edges: Iterable[tuple[int, int]],
        B: int,
    ) -> "Instance":
        n = len(weight)
        if len(budget) != n:
            raise ValidationError("weight and budget lengths differ")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexOutOfRange(f"edge ({u}, {v}) names vertex {x} >= n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        inst = cls(
            n=n,
            adjacency=tuple(tuple(sorted(s)) for s in nbrs),
            weight=tuple(int(w) for w in weight),
            budget=tuple(int(b) for b in budget),
            B=int(B),
        )
        return validate_instance(inst)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def with_budget(self, B: int) -> "Instance":
        return Instance(self.n, self.adjacency, self.weight, self.budget, int(B))

    def unweighted(self) -> "Instance":
        """Copy with every weight set to one unit (1000 milli)."""
        return Instance(self.n, self.adjacency, (1000,) * self.n, self.budget, self.B)

    def induced(self, vertices: Sequence[int]) -> tuple["Instance", list[int]]:
        """Induced subinstance on ``vertices``; also returns new-id -> old-id."""
        old = list(vertices)
        index = {v: i for i, v in enumerate(old)}
        adj = tuple(
            tuple(sorted(index[u] for u in self.adjacency[v] if u in index)) for v in old
        )
        sub = Instance(
            len(old),
            adj,
            tuple(self.weight[v] for v in old),
            tuple(self.budget[v] for v in old),
            self.B,
        )
        return sub, old


@dataclass(frozen=True)
class Solution:
    vertices: tuple[int, ...]
    total_weight: int
    total_budget: int

    def __len__(self) -> int:
        return len(self.vertices)


def validate_instance(inst: Instance) -> Instance:
    """Return ``inst`` unchanged if all structural invariants hold."""
    if len(inst.adjacency) != inst.n or len(inst.weight) != inst.n or len(inst.budget) != inst.n:
        raise ValidationError("per-vertex sequences must all have length n")
    if inst.B < 0:
        raise ValidationError(f"global budget B={inst.B} is negative")
    for v in range(inst.n):
        if inst.budget[v] < 1:
            raise NonPositiveBudget(f"vertex {v} has budget {inst.budget[v]}")
        if inst.weight[v] < 0:
            raise NegativeWeight(f"vertex {v} has weight {inst.weight[v]}")
        for u in inst.adjacency[v]:
            if not 0 <= u < inst.n:
                raise VertexOutOfRange(f"vertex {v} lists neighbor {u} >= n={inst.n}")
            if u == v:
                raise SelfLoop(f"edge ({v}, {v})")
            if v not in inst.adjacency[u]:
                raise AsymmetricAdjacency(f"edge ({v}, {u}) missing reverse direction")
    return inst


def is_independent(inst: Instance, S: Iterable[int]) -> bool:
    members = set(S)
    for v in members:
        if not 0 <= v < inst.n:
            raise VertexOutOfRange(f"vertex {v} >= n={inst.n}")
    return not any(u in members for v in members for u in inst.adjacency[v])


def make_solution(inst: Instance, vertices: Iterable[int]) -> Solution:
    vs = tuple(sorted(set(vertices)))
    return Solution(
        vs,
        sum(inst.weight[v] for v in vs),
        sum(inst.budget[v] for v in vs),
    )


def check_solution(inst: Instance, sol: Solution) -> None:
    """Assert every Solution invariant against ``inst``; raises AssertionError."""
    assert list(sol.vertices) == sorted(set(sol.vertices)), "vertices not sorted/unique"
    assert is_independent(inst, sol.vertices), f"not independent: {sol.vertices}"
    assert sol.total_weight == sum(inst.weight[v] for v in sol.vertices)
    assert sol.total_budget == sum(inst.budget[v] for v in sol.vertices)
    assert sol.total_budget <= inst.B, f"budget {sol.total_budget} > B={inst.B}"


def better(a: Solution, b: Solution | None) -> bool:
    """Global tie-break: heavier, then cheaper, then lexicographically smaller."""
    if b is None:
        return True
    return (-a.total_weight, a.total_budget, a.vertices) < (-b.total_weight, b.total_budget, b.vertices)


def check_cell_guard(n: int, B: int, guard: int = CELL_GUARD) -> None:
    if n * (B + 1) > guard:
        raise BudgetGuardExceeded(f"n*(B+1) = {n * (B + 1)} exceeds guard {guard}")


def brute_force_mwbis(inst: Instance, cap: int = ORACLE_MAX_N) -> Solution:
    """Exhaustive optimum over all 2^n vertex subsets.

    Subset sums and independence flags are built by doubling: the half of
    the subset space containing vertex ``v`` is the lower half shifted by
    ``v``'s contribution.
    """
    n = inst.n
    if n > cap:
        raise InstanceTooLarge(f"n={n} exceeds oracle cap {cap}")
    weight = np.zeros(1, dtype=np.int64)
    budget = np.zeros(1, dtype=np.int64)
    indep = np.ones(1, dtype=bool)
    masks = np.zeros(1, dtype=np.int64)
    for v in range(n):
        lower_nbrs = 0
        for u in inst.adjacency[v]:
            if u < v:
                lower_nbrs |= 1 << u
        weight = np.concatenate([weight, weight + inst.weight[v]])
        budget = np.concatenate([budget, budget + inst.budget[v]])
        indep = np.concatenate([indep, indep & ((masks & lower_nbrs) == 0)])
        masks = np.concatenate([masks, masks | (1 << v)])
    feasible = indep & (budget <= inst.B)
    best_w = weight[feasible].max()
    tied = feasible & (weight == best_w)
    best_b = budget[tied].min()
    tied &= budget == best_b
    candidates = [
        tuple(v for v in range(n) if (m >> v) & 1) for m in masks[tied].tolist()
    ]
    return Solution(min(candidates), int(best_w), int(best_b))
