"""Slice tables and the operations that combine them.

A table describes a region bounded by a *first* and a *second* boundary,
each holding one vertex per level ``1..i``. Entry ``[a, c, budget]`` is the
best weight of an independent set of the region whose intersection with
the first boundary is the bit-vector ``a`` (bit ``l-1`` for level ``l``)
and with the second boundary is ``c``, spending at most ``budget``.

Charging: a vertex's weight and budget are counted in the region where it
sits on the second boundary, never where it sits on the first. Regions are
positions in the universal cover of the band, so a region that wraps a
full turn on some level holds two copies of that level's boundary vertex
(one per boundary); their bits are forced equal and only the second copy
is charged.

Each entry is either an integer or absent (``valid`` False); absent
entries never participate in a maximum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from ..alloc import maxplus_pair
from ..core import Instance
from ..errors import BoundaryMismatch


@dataclass(eq=False)
class SliceTable:
    first: tuple[int, ...]
    second: tuple[int, ...]
    span: tuple[int, ...]  # lifted distance from first to second, per level
    sizes: tuple[int, ...]  # level cycle lengths, for wrap detection
    value: np.ndarray  # (2^i, 2^i, B+1) int64
    valid: np.ndarray  # same shape, bool
    origin: tuple = field(default=("leaf",), repr=False)

    @property
    def depth(self) -> int:
        return len(self.first)

    @property
    def budget(self) -> int:
        return self.value.shape[-1] - 1

    def entry(self, a: int, c: int, b: int):
        return int(self.value[a, c, b]) if self.valid[a, c, b] else None


def _bits(x: int, i: int) -> list[int]:
    return [(x >> l) & 1 for l in range(i)]


def _independent_bits(inst: Instance, verts, bits) -> bool:
    chosen = [v for v, s in zip(verts, bits) if s]
    return not any(u in inst.adjacency[v] for v in chosen for u in chosen)


def _enforce_wraps(t: SliceTable) -> None:
    i = t.depth
    for l in range(i):
        if t.span[l] == 0 or t.span[l] == t.sizes[l]:
            idx = np.arange(1 << i)
            differ = ((idx[:, None] >> l) & 1) != ((idx[None, :] >> l) & 1)
            t.valid[differ] = False


def base_table(inst: Instance, u: int, v: int, size: int, B: int) -> SliceTable:
    """Level-1 slice of face edge ``(u, v)``; ``v`` is charged."""
    value = np.zeros((2, 2, B + 1), dtype=np.int64)
    valid = np.zeros((2, 2, B + 1), dtype=bool)
    for a in (0, 1):
        valid[a, 0, :] = True
        if not (a and v in inst.adjacency[u]) and inst.budget[v] <= B:
            valid[a, 1, inst.budget[v]:] = True
            value[a, 1, :] = inst.weight[v]
    return SliceTable((u,), (v,), (1,), (size,), value, valid, ("base",))


def trivial_table(inst: Instance, verts: tuple[int, ...], sizes, B: int) -> SliceTable:
    """Zero-width region consisting of one boundary path; nothing is charged."""
    i = len(verts)
    value = np.zeros((1 << i, 1 << i, B + 1), dtype=np.int64)
    valid = np.zeros((1 << i, 1 << i, B + 1), dtype=bool)
    for a in range(1 << i):
        if _independent_bits(inst, verts, _bits(a, i)):
            valid[a, a, :] = True
    return SliceTable(verts, verts, (0,) * i, tuple(sizes), value, valid, ("trivial",))


def mask_table(t: SliceTable, level: int, banned: set[int]) -> SliceTable:
    """Invalidate entries selecting a banned vertex on ``level`` of either boundary."""
    l = level - 1
    hit_first = t.first[l] in banned
    hit_second = t.second[l] in banned
    if not (hit_first or hit_second):
        return t
    idx = np.arange(1 << t.depth)
    sel = ((idx >> l) & 1).astype(bool)
    kill = np.zeros((1 << t.depth, 1 << t.depth), dtype=bool)
    if hit_first:
        kill |= sel[:, None]
    if hit_second:
        kill |= sel[None, :]
    valid = t.valid & ~kill[:, :, None]
    return SliceTable(t.first, t.second, t.span, t.sizes, t.value, valid, ("mask", t))


def merge_tables(t1: SliceTable, t2: SliceTable) -> SliceTable:
    """Union of two adjacent regions: ALLOC of the budget between the two
    sides for every shared-boundary combination, maximised over it."""
    if t1.second != t2.first or t1.depth != t2.depth:
        raise BoundaryMismatch(f"second boundary {t1.second} != first boundary {t2.first}")
    v, m = maxplus_pair(
        t1.value[:, :, None, :], t1.valid[:, :, None, :],
        t2.value[None, :, :, :], t2.valid[None, :, :, :],
    )
    # (a, b, c, budget) -> max over b
    scored = np.where(m, v, np.iinfo(np.int64).min)
    best = scored.max(axis=1)
    valid = m.any(axis=1)
    value = np.where(valid, best, 0)
    span = tuple(x + y for x, y in zip(t1.span, t2.span))
    out = SliceTable(t1.first, t2.second, span, t1.sizes, value, valid, ("merge", t1, t2))
    _enforce_wraps(out)
    return out


def extend_table(
    inst: Instance, merged: Mapping[tuple[int, int], SliceTable], u: int, v: int, size: int
) -> SliceTable:
    """Add face edge ``(u, v)`` one level up.

    ``merged[(su, sv)]`` is the table of the region below the edge, already
    masked against the neighbors of ``u`` (if ``su``) and ``v`` (if ``sv``);
    its boundaries end at the anchors of ``u`` and ``v``. ``u`` joins the
    first boundary uncharged, ``v`` joins the second and is charged.
    """
    low = merged[(0, 0)]
    i = low.depth + 1
    B = low.budget
    value = np.zeros((1 << i, 1 << i, B + 1), dtype=np.int64)
    valid = np.zeros((1 << i, 1 << i, B + 1), dtype=bool)
    top = 1 << (i - 1)
    half = slice(0, top)
    for (su, sv), t in merged.items():
        if su and sv and v in inst.adjacency[u]:
            continue
        rows = slice(top, 2 * top) if su else half
        cols = slice(top, 2 * top) if sv else half
        if sv:
            cost, gain = inst.budget[v], inst.weight[v]
            if cost > B:
                continue
            value[rows, cols, cost:] = t.value[:, :, : B + 1 - cost] + gain
            valid[rows, cols, cost:] = t.valid[:, :, : B + 1 - cost]
        else:
            value[rows, cols, :] = t.value
            valid[rows, cols, :] = t.valid
    return SliceTable(
        low.first + (u,),
        low.second + (v,),
        low.span + (1,),
        low.sizes + (size,),
        value,
        valid,
        ("extend", dict(merged), u, v, inst.budget[v]),
    )


def witness(t: SliceTable, a: int, c: int, b: int) -> set[int]:
    """Vertices of a set attaining entry ``[a, c, b]`` (boundaries included)."""
    assert t.valid[a, c, b], "witness requested for an absent entry"
    chosen: set[int] = set()
    stack = [(t, a, c, b)]
    while stack:
        t, a, c, b = stack.pop()
        kind = t.origin[0]
        if kind == "base":
            if a:
                chosen.add(t.first[0])
            if c:
                chosen.add(t.second[0])
        elif kind == "trivial":
            chosen.update(x for x, s in zip(t.first, _bits(a, t.depth)) if s)
        elif kind == "mask":
            stack.append((t.origin[1], a, c, b))
        elif kind == "merge":
            t1, t2 = t.origin[1], t.origin[2]
            stack.extend(_split_merge(t1, t2, a, c, b, int(t.value[a, c, b])))
        elif kind == "extend":
            _, merged, u, v, cost_v = t.origin
            top = t.depth - 1
            su, sv = (a >> top) & 1, (c >> top) & 1
            if su:
                chosen.add(u)
            if sv:
                chosen.add(v)
                b -= cost_v
            low_bits = ~(1 << top)
            stack.append((merged[(su, sv)], a & low_bits, c & low_bits, b))
        else:  # pragma: no cover
            raise AssertionError(kind)
    return chosen


def _split_merge(t1: SliceTable, t2: SliceTable, a: int, c: int, q: int, target: int):
    for b in range(1 << t1.depth):
        for s in range(q + 1):
            if t1.valid[a, b, s] and t2.valid[b, c, q - s]:
                if int(t1.value[a, b, s]) + int(t2.value[b, c, q - s]) == target:
                    return [(t1, a, b, s), (t2, b, c, q - s)]
    raise AssertionError("merge entry has no supporting split")
