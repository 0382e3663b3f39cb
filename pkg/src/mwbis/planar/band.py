"""Exact dynamic program on one simply nested band.

Level-1 slices are the outer face edges. A level-``i`` slice for face edge
``(x_j, x_{j+1})`` covers the level-``(i-1)`` slices lying between the
anchors of ``x_j`` and ``x_{j+1}``; its boundaries are ``x_j`` (resp.
``x_{j+1}``) followed by the boundary through its anchor. Cross edges from
``x_j`` and ``x_{j+1}`` land on level-``(i-1)`` boundary vertices inside
that span, so they are enforced by masking the lower slice tables before
they are merged, once per choice of the two new vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..alloc import ValueProfile
from ..core import Solution, make_solution
from ..errors import BudgetGuardExceeded
from .leveled import LeveledPlanarInstance
from .tables import (
    SliceTable,
    base_table,
    extend_table,
    mask_table,
    merge_tables,
    trivial_table,
    witness,
)

PLANAR_GUARD = 10**8


@dataclass(frozen=True)
class Slice:
    level: int
    index: int
    edge: tuple[int, int]
    first: tuple[int, ...]  # boundary vertices, level 1 first
    second: tuple[int, ...]
    first_pos: tuple[int, ...]  # same, as lifted positions
    second_pos: tuple[int, ...]
    below: tuple[int, int]  # lifted range [lo, hi) of level-(i-1) slices covered


def build_slices(band: LeveledPlanarInstance) -> list[list[Slice]]:
    """``out[i-1][j]`` is the level-``i`` slice of face edge ``j`` on level ``i``."""
    out = []
    for level in range(1, band.depth + 1):
        row = []
        for j in range(band.level_size(level)):
            fp = band.boundary(level, j)
            sp = band.boundary(level, j + 1)
            lo = hi = 0
            if level > 1:
                lo, hi = band.anchor(level, j), band.anchor(level, j + 1)
            row.append(
                Slice(
                    level,
                    j,
                    (band.vertex_at(level, j), band.vertex_at(level, j + 1)),
                    tuple(band.vertex_at(l + 1, x) for l, x in enumerate(fp)),
                    tuple(band.vertex_at(l + 1, x) for l, x in enumerate(sp)),
                    fp,
                    sp,
                    (lo, hi),
                )
            )
        out.append(row)
    return out


@dataclass
class BandResult:
    profile: ValueProfile
    table: SliceTable | None  # whole-band table, None for an empty band

    def witness(self, budget: int) -> set[int]:
        if self.table is None:
            return set()
        a, _ = self._best(budget)
        return witness(self.table, a, a, budget)

    def _best(self, budget: int):
        t = self.table
        best = None
        for a in range(1 << t.depth):
            if t.valid[a, a, budget] and (best is None or t.value[a, a, budget] > best[1]):
                best = (a, int(t.value[a, a, budget]))
        return best


def _sub_region(band, tables, level, s: Slice, su, sv, B):
    """Masked, merged table of the level-(level-1) region under slice ``s``."""
    inst = band.instance
    u, v = s.edge
    banned: set[int] = set()
    if su:
        banned.update(inst.adjacency[u])
    if sv:
        banned.update(inst.adjacency[v])
    lower = level - 1
    lo, hi = s.below
    if lo == hi:
        sizes = tuple(band.level_size(l) for l in range(1, lower + 1))
        parts = [trivial_table(inst, s.first[:lower], sizes, B)]
    else:
        p = band.level_size(lower)
        parts = [tables[lower - 1][x % p] for x in range(lo, hi)]
    if banned:
        parts = [mask_table(t, lower, banned) for t in parts]
    return reduce(merge_tables, parts)


def solve_band(band: LeveledPlanarInstance, B: int | None = None, guard: int = PLANAR_GUARD) -> BandResult:
    """Exact optimum of the band for every budget ``0..B``."""
    B = band.instance.B if B is None else B
    inst = band.instance
    if band.depth == 0:
        return BandResult(ValueProfile((0,) * (B + 1)), None)
    cells = (4 ** band.depth) * (B + 1) * inst.n
    if cells > guard:
        raise BudgetGuardExceeded(f"4^k * (B+1) * slices = {cells} exceeds guard {guard}")

    slices = build_slices(band)
    tables: list[list[SliceTable]] = []
    size1 = band.level_size(1)
    tables.append([base_table(inst, *s.edge, size1, B) for s in slices[0]])
    for level in range(2, band.depth + 1):
        row = []
        for s in slices[level - 1]:
            u, v = s.edge
            merged = {
                sig: _sub_region(band, tables, level, s, *sig, B)
                for sig in ((0, 0), (1, 0), (0, 1), (1, 1))
                if not (sig == (1, 1) and v in inst.adjacency[u])
            }
            row.append(extend_table(inst, merged, u, v, band.level_size(level)))
        tables.append(row)

    whole = reduce(merge_tables, tables[-1])
    diag = np.arange(1 << whole.depth)
    vals = whole.value[diag, diag, :]
    ok = whole.valid[diag, diag, :]
    profile = []
    for b in range(B + 1):
        present = vals[ok[:, b], b]
        profile.append(int(present.max()) if present.size else None)
    return BandResult(ValueProfile(tuple(profile)), whole)


def solve_band_solution(band: LeveledPlanarInstance, B: int | None = None) -> Solution:
    B = band.instance.B if B is None else B
    res = solve_band(band, B)
    sol = make_solution(band.instance, res.witness(B))
    assert sol.total_weight == res.profile[B]
    return sol
