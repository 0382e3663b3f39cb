"""Optimum resource allocation (ALLOC).

Distributes ``p`` indivisible budget units across ``k`` value profiles to
maximise the summed value, via the prefix recurrence

    g_j(q) = max_{0 <= t <= q} g_{j-1}(q - t) + f_j(t),   g_0(q) = 0,

with one backpointer (the chosen ``t``) per cell. Because ``g_0`` is zero
everywhere, ``g_k(q)`` is the best value with total allocation *at most*
``q``, so one table answers every budget ``0..p`` at once.

Profile entries may be ``None``: an explicitly absent (infeasible) value.
Absent entries never take part in a maximum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import ProfileTooShort, ValidationError

Value = Optional[int]


@dataclass(frozen=True)
class ValueProfile:
    """Best achievable value for each budget 0..p.

    A (possibly empty) prefix of entries may be absent; the remaining
    entries are nondecreasing.
    """

    values: tuple[Value, ...]
    monotonized: bool = field(default=False, compare=False)

    def __post_init__(self):
        seen = None
        for t, x in enumerate(self.values):
            if x is None:
                if seen is not None:
                    raise ValidationError(f"absent entry at t={t} after a present one")
                continue
            if seen is not None and x < seen:
                raise ValidationError(f"profile decreases at t={t}; use ValueProfile.from_raw")
            seen = x

    @classmethod
    def from_raw(cls, values: Sequence[Value]) -> "ValueProfile":
        """Monotonise by running maximum, recording whether anything changed."""
        out: list[Value] = []
        best = None
        changed = False
        for x in values:
            if x is None:
                if best is not None:
                    changed = True
                out.append(best)
                continue
            if best is None or x >= best:
                best = x
            else:
                changed = True
            out.append(best)
        return cls(tuple(out), monotonized=changed)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, t: int) -> Value:
        return self.values[t]


@dataclass(frozen=True)
class AllocResult:
    allocation: tuple[int, ...]
    value: Value


def _as_arrays(profile, p):
    vals = profile.values if isinstance(profile, ValueProfile) else tuple(profile)
    if len(vals) < p + 1:
        raise ProfileTooShort(f"profile has {len(vals)} entries, need {p + 1}")
    vals = vals[: p + 1]
    mask = np.array([x is not None for x in vals], dtype=bool)
    arr = np.array([0 if x is None else x for x in vals], dtype=np.int64)
    return arr, mask


class AllocTable:
    """The full prefix DP for ``ALLOC(f_1..f_k; p)``; query any budget ``q <= p``."""

    def __init__(self, profiles: Sequence[ValueProfile | Sequence[Value]], p: int):
        if p < 0:
            raise ValidationError(f"p={p} is negative")
        self.p = p
        self.k = len(profiles)
        g = np.zeros(p + 1, dtype=np.int64)
        gm = np.ones(p + 1, dtype=bool)
        q_idx = np.arange(p + 1)[:, None]
        t_idx = np.arange(p + 1)[None, :]
        lower = t_idx <= q_idx
        diff = np.where(lower, q_idx - t_idx, 0)
        self._choice = np.zeros((self.k, p + 1), dtype=np.int64)
        for j, prof in enumerate(profiles):
            f, fm = _as_arrays(prof, p)
            cand = g[diff] + f[None, :]
            valid = lower & gm[diff] & fm[None, :]
            # absent cells are excluded through ``valid``; the fill value never wins
            scored = np.where(valid, cand, np.iinfo(np.int64).min)
            t_best = scored.argmax(axis=1)
            gm = valid.any(axis=1)
            g = np.where(gm, scored[np.arange(p + 1), t_best], 0)
            self._choice[j] = t_best
        self._g = g
        self._gm = gm

    def value(self, q: int) -> Value:
        return int(self._g[q]) if self._gm[q] else None

    def values(self) -> tuple[Value, ...]:
        return tuple(self.value(q) for q in range(self.p + 1))

    def allocation(self, q: int) -> tuple[int, ...]:
        if not self._gm[q]:
            raise ValueError(f"no feasible allocation at q={q}")
        alloc = [0] * self.k
        for j in range(self.k - 1, -1, -1):
            t = int(self._choice[j, q])
            alloc[j] = t
            q -= t
        return tuple(alloc)

    def result(self, q: int | None = None) -> AllocResult:
        q = self.p if q is None else q
        v = self.value(q)
        return AllocResult(self.allocation(q) if v is not None else (), v)


def alloc(profiles: Sequence[ValueProfile | Sequence[Value]], p: int) -> AllocResult:
    """Best allocation of at most ``p`` units; ties go to smaller earlier shares."""
    return AllocTable(profiles, p).result(p)


def maxplus_pair(v1, m1, v2, m2):
    """Batched two-profile ALLOC for every budget at once.

    ``v*`` are int64 arrays of shape ``(..., P+1)`` with boolean presence
    masks ``m*`` of the same shape; returns ``(value, mask)`` where
    ``value[..., q] = max_t v1[..., t] + v2[..., q - t]`` over present pairs.
    """
    v1, m1, v2, m2 = np.broadcast_arrays(v1, m1, v2, m2)
    P = v1.shape[-1]
    out = np.zeros(v1.shape, dtype=np.int64)
    om = np.zeros(v1.shape, dtype=bool)
    for t in range(P):
        cand = v1[..., t : t + 1] + v2[..., : P - t]
        cm = m1[..., t : t + 1] & m2[..., : P - t]
        seg, segm = out[..., t:], om[..., t:]
        take = cm & (~segm | (cand > seg))
        out[..., t:] = np.where(take, cand, seg)
        om[..., t:] = segm | cm
    return out, om
