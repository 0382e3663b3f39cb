"""Layering approximation scheme on simply nested instances.

For each residue ``r`` in ``0..k`` the levels congruent to ``r`` modulo
``k + 1`` are deleted; what remains splits into mutually non-adjacent
bands of at most ``k`` consecutive levels. Each band is solved exactly for
every budget, the budget is split across bands with ALLOC, and the best of
the ``k + 1`` residues is returned.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..alloc import alloc
from ..core import Solution, better, make_solution
from ..errors import ValidationError
from .band import solve_band
from .leveled import LeveledPlanarInstance, validate_leveled


@dataclass(frozen=True)
class Band:
    leveled: LeveledPlanarInstance
    ids: tuple[int, ...]  # band vertex -> original vertex
    levels: tuple[int, ...]  # original level numbers covered


def _band(lp: LeveledPlanarInstance, level_nums: list[int]) -> Band:
    verts = [v for l in level_nums for v in lp.levels[l - 1]]
    sub, old = lp.instance.induced(verts)
    index = {v: i for i, v in enumerate(old)}
    relabeled = [[index[v] for v in lp.levels[l - 1]] for l in level_nums]
    return Band(validate_leveled(sub, relabeled), tuple(old), tuple(level_nums))


def layer_decompose(lp: LeveledPlanarInstance, k: int, r: int) -> list[Band]:
    """Delete levels ``≡ r (mod k+1)`` and return the connected bands left."""
    if k < 1 or not 0 <= r <= k:
        raise ValidationError(f"need k >= 1 and 0 <= r <= k, got k={k}, r={r}")
    linked = {lp.level_of[inner] for _, inner in lp.cross_edges}  # levels tied to the one above
    runs: list[list[int]] = []
    for level in range(1, lp.depth + 1):
        if level % (k + 1) == r:
            continue
        if runs and runs[-1][-1] == level - 1 and level in linked:
            runs[-1].append(level)
        else:
            runs.append([level])
    return [_band(lp, run) for run in runs]


def solve_layering(lp: LeveledPlanarInstance, k: int, r: int, B: int) -> Solution:
    bands = layer_decompose(lp, k, r)
    results = [solve_band(b.leveled, B) for b in bands]
    share = alloc([res.profile for res in results], B)
    chosen: set[int] = set()
    for band, res, budget in zip(bands, results, share.allocation):
        chosen.update(band.ids[v] for v in res.witness(budget))
    sol = make_solution(lp.instance, chosen)
    assert sol.total_weight == share.value
    return sol


def ptas(lp: LeveledPlanarInstance, k: int, B: int | None = None) -> Solution:
    """Weight at least ``k/(k+1)`` of the optimum."""
    B = lp.instance.B if B is None else B
    if k < 1:
        raise ValidationError(f"k={k} must be at least 1")
    if lp.depth == 0:
        return Solution((), 0, 0)
    best = None
    for r in range(k + 1):
        sol = solve_layering(lp, k, r, B)
        if better(sol, best):
            best = sol
    return best
