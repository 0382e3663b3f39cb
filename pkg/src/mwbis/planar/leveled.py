"""Simply nested planar instances.

A leveled instance lists its levels outermost first; each level is a cycle
given in counterclockwise order. Every edge is either a face edge
(consecutive on one level) or a cross edge between consecutive levels.

Cross edges between two levels are certified non-crossing by lifting them
to the universal cover of the annulus between the two cycles: inner index
``X`` and outer index ``Y`` become integers, and the edges must form a
chain that is nondecreasing in both coordinates and advances by at most
one full turn ``(p, q)``. The lifts are kept because the slice boundaries
are derived from them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..core import Instance
from ..errors import (
    CrossingCrossEdges,
    DegenerateLevel,
    MultiFaceLevel,
    NonConsecutiveLevelEdge,
    ValidationError,
)


@dataclass(frozen=True)
class LeveledPlanarInstance:
    instance: Instance
    levels: tuple[tuple[int, ...], ...]
    level_of: tuple[int, ...]  # 1-based level per vertex
    position: tuple[int, ...]  # index within its level's cyclic order
    # anchors[i][j]: lifted position on level i of the boundary anchor of
    # vertex j on level i + 1 (0-based level indices; anchors[0] is unused)
    anchors: tuple[tuple[int, ...], ...]
    cross_edges: tuple[tuple[int, int], ...]

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level_size(self, level: int) -> int:
        return len(self.levels[level - 1])

    def vertex_at(self, level: int, pos: int) -> int:
        lv = self.levels[level - 1]
        return lv[pos % len(lv)]

    def anchor(self, level: int, pos: int) -> int:
        """Lifted position on ``level - 1`` anchoring lifted ``pos`` on ``level``."""
        p = self.level_size(level)
        q = self.level_size(level - 1)
        return self.anchors[level - 1][pos % p] + (pos // p) * q

    def boundary(self, level: int, pos: int) -> tuple[int, ...]:
        """Lifted positions (level 1 first) of the boundary through ``pos``."""
        out = [pos]
        for lv in range(level, 1, -1):
            pos = self.anchor(lv, pos)
            out.append(pos)
        return tuple(reversed(out))

    def face_edges(self) -> list[tuple[int, int]]:
        return [(lv[j], lv[(j + 1) % len(lv)]) for lv in self.levels for j in range(len(lv))]


def chain_lifts(p: int, q: int, pairs: Sequence[tuple[int, int]]):
    """Lift cross edges ``(inner_idx, outer_idx)`` to a monotone chain.

    Returns ``[(X, Y, x, y), ...]`` sorted, or raises CrossingCrossEdges.
    Tries each edge as the chain start; see module docstring.
    """
    if not pairs:
        return []
    for xs, ys in pairs:
        rel = [((x - xs) % p, (y - ys) % q, x, y) for x, y in pairs]
        spread = [dx for dx, dy, _, _ in rel if dy > 0]
        lo = min(spread, default=None)
        hi = max(spread, default=None)
        lifts = []
        for dx, dy, x, y in rel:
            Y = dy
            if dy == 0 and dx > 0 and lo is not None and dx > lo and dx >= hi:
                Y = q
            lifts.append((dx, Y, x, y))
        lifts.sort()
        if all(a[1] <= b[1] for a, b in zip(lifts, lifts[1:])):
            return [(xs + dx, ys + Y, x, y) for dx, Y, x, y in lifts]
    raise CrossingCrossEdges(f"cross edges {sorted(pairs)} cannot be drawn without crossings")


def _anchors_from_lifts(p: int, q: int, lifts) -> tuple[int, ...]:
    if not lifts:
        return (0,) * p
    xs = lifts[0][0]
    own: dict[int, list[int]] = {}
    for X, Y, _, _ in lifts:
        own.setdefault(X, []).append(Y)
    by_lift = {}
    last = None
    for X in range(xs, xs + p):
        if X in own:
            by_lift[X] = min(own[X])
            last = max(own[X])
        else:
            by_lift[X] = last
    return tuple(by_lift[j] if j >= xs else by_lift[j + p] - q for j in range(p))


def validate_leveled(inst: Instance, levels: Sequence[Sequence[int]]) -> LeveledPlanarInstance:
    levels = tuple(tuple(lv) for lv in levels)
    level_of = [0] * inst.n
    position = [0] * inst.n
    for li, lv in enumerate(levels, start=1):
        if len(lv) < 3:
            raise DegenerateLevel(f"level {li} has {len(lv)} vertices; a face needs at least 3")
        for j, v in enumerate(lv):
            if not 0 <= v < inst.n:
                raise ValidationError(f"level {li} names vertex {v} >= n={inst.n}")
            if level_of[v]:
                raise ValidationError(f"vertex {v} appears in levels {level_of[v]} and {li}")
            level_of[v] = li
            position[v] = j
    missing = [v for v in range(inst.n) if not level_of[v]]
    if missing:
        raise ValidationError(f"vertices {missing} belong to no level")

    cross: dict[int, list[tuple[int, int]]] = {}
    for u, v in inst.edges():
        lu, lv = level_of[u], level_of[v]
        if lu == lv:
            size = len(levels[lu - 1])
            if (position[u] - position[v]) % size not in (1, size - 1):
                raise MultiFaceLevel(f"chord ({u}, {v}) splits the level-{lu} face")
        elif abs(lu - lv) == 1:
            outer, inner = (u, v) if lu < lv else (v, u)
            cross.setdefault(level_of[inner], []).append((outer, inner))
        else:
            raise NonConsecutiveLevelEdge(f"edge ({u}, {v}) joins levels {lu} and {lv}")
    for li, lv in enumerate(levels, start=1):
        for j, v in enumerate(lv):
            w = lv[(j + 1) % len(lv)]
            if w not in inst.adjacency[v]:
                raise MultiFaceLevel(f"level {li} face edge ({v}, {w}) is missing")

    anchors: list[tuple[int, ...]] = [()]
    for li in range(2, len(levels) + 1):
        p, q = len(levels[li - 1]), len(levels[li - 2])
        pairs = [(position[inner], position[outer]) for outer, inner in cross.get(li, [])]
        anchors.append(_anchors_from_lifts(p, q, chain_lifts(p, q, pairs)))

    cross_edges = tuple(sorted(e for es in cross.values() for e in es))
    return LeveledPlanarInstance(
        inst, levels, tuple(level_of), tuple(position), tuple(anchors), cross_edges
    )


def build_leveled(
    weight: Sequence[int],
    budget: Sequence[int],
    levels: Sequence[Sequence[int]],
    cross_edges: Sequence[tuple[int, int]],
    B: int,
) -> LeveledPlanarInstance:
    """Create the instance (face edges implied by ``levels``) and validate it."""
    face = [(lv[j], lv[(j + 1) % len(lv)]) for lv in levels for j in range(len(lv)) if len(lv) >= 2]
    inst = Instance.from_edges(weight, budget, list(face) + list(cross_edges), B)
    return validate_leveled(inst, levels)
