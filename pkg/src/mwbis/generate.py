"""Seeded instance families.

Every generator draws from its own ``random.Random(seed)`` so output is
bit-identical per (family, params, seed).
"""
from __future__ import annotations

import random
from typing import Any

from .core import Instance
from .errors import BadParams
from .greedy import verify_claw_free
from .interval import Interval, IntervalInstance
from .planar.leveled import LeveledPlanarInstance, build_leveled
from .reductions import KnapsackInstance
from .tree import RootedTree, root_tree


def _wb(rng, n, max_w, max_b):
    return [rng.randint(0, max_w) for _ in range(n)], [rng.randint(1, max_b) for _ in range(n)]


def random_tree(rng, n, max_w=20, max_b=5, B=None) -> Instance:
    if n < 1:
        raise BadParams("tree needs n >= 1")
    w, b = _wb(rng, n, max_w, max_b)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in edges]
    B = rng.randint(0, 15) if B is None else B
    return Instance.from_edges(w, b, edges, B)


def random_forest(rng, n, trees=3, max_w=20, max_b=5, B=None) -> Instance:
    if not 1 <= trees <= n:
        raise BadParams("forest needs 1 <= trees <= n")
    w, b = _wb(rng, n, max_w, max_b)
    perm = list(range(n))
    rng.shuffle(perm)
    cuts = sorted(rng.sample(range(1, n), trees - 1)) if trees > 1 else []
    edges = []
    for lo, hi in zip([0] + cuts, cuts + [n]):
        for v in range(lo + 1, hi):
            edges.append((perm[rng.randrange(lo, v)], perm[v]))
    B = rng.randint(0, 15) if B is None else B
    return Instance.from_edges(w, b, edges, B)


def random_cycle(rng, n, max_w=20, max_b=5, B=None) -> Instance:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    w, b = _wb(rng, n, max_w, max_b)
    B = rng.randint(0, 15) if B is None else B
    return Instance.from_edges(w, b, [(v, (v + 1) % n) for v in range(n)], B)


def random_graph(rng, n, p=0.3, max_w=20, max_b=5, B=None) -> Instance:
    w, b = _wb(rng, n, max_w, max_b)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    B = rng.randint(0, 20) if B is None else B
    return Instance.from_edges(w, b, edges, B)


def random_claw_free(rng, n, d, max_b=5, B=None, tries=10_000) -> Instance:
    """Rejection-sample a graph verified ``(d+1)``-claw-free (unit weights)."""
    for _ in range(tries):
        p = rng.uniform(0.15, 0.9)
        inst = random_graph(rng, n, p, max_w=1000, max_b=max_b, B=B).unweighted()
        if verify_claw_free(inst, d):
            return inst
    raise BadParams(f"no {d + 1}-claw-free graph found in {tries} tries")


def random_intervals(rng, n, horizon=30, max_len=10, max_w=20, max_b=5):
    out = []
    for _ in range(n):
        s = rng.randint(0, horizon - 1)
        out.append(Interval(s, s + rng.randint(1, max_len), rng.randint(0, max_w), rng.randint(1, max_b)))
    return out


def _monotone_cross_edges(rng, p, q, density):
    """Random subset of a lattice path winding once around the annulus."""
    x, y = 0, rng.randrange(q)
    y_end = y + q
    pts = [(x, y)]
    while (x, y) != (p, y_end):
        moves = []
        if x < p:
            moves.append((1, 0))
        if y < y_end:
            moves.append((0, 1))
        if x < p and y < y_end:
            moves.append((1, 1))
        dx, dy = rng.choice(moves)
        x, y = x + dx, y + dy
        pts.append((x, y))
    pairs = {(X % p, Y % q) for X, Y in pts[:-1] if rng.random() < density}
    return sorted(pairs)


def random_simply_nested(rng, level_sizes, max_w=20, max_b=4, B=None, density=0.6) -> LeveledPlanarInstance:
    levels, nxt = [], 0
    for size in level_sizes:
        if size < 3:
            raise BadParams("every level needs at least 3 vertices")
        levels.append(list(range(nxt, nxt + size)))
        nxt += size
    cross = []
    for outer, inner in zip(levels, levels[1:]):
        for x, y in _monotone_cross_edges(rng, len(inner), len(outer), density):
            cross.append((outer[y], inner[x]))
    w, b = _wb(rng, nxt, max_w, max_b)
    B = rng.randint(0, 12) if B is None else B
    return build_leveled(w, b, levels, cross, B)


def mbf_tight(d: int) -> Instance:
    """Star K_{1,d}: center budget 1, leaves budget 2, B = 2d, unit weights."""
    if d < 1:
        raise BadParams("d >= 1")
    return Instance.from_edges(
        [1000] * (d + 1), [1] + [2] * d, [(0, j) for j in range(1, d + 1)], 2 * d
    )


def mwbrf_bad(d: int, M: int) -> Instance:
    """Star K_{1,d}: center weight 1 budget 1, leaves weight M/d budget M, B = dM."""
    if d < 1 or M < 1 or (1000 * M) % d:
        raise BadParams("need d >= 1, M >= 1 and M/d representable in milli-units")
    return Instance.from_edges(
        [1000] + [1000 * M // d] * d,
        [1] + [M] * d,
        [(0, j) for j in range(1, d + 1)],
        d * M,
    )


def prism(outer_w=1000, inner_w=2000, B=2) -> LeveledPlanarInstance:
    """Two nested triangles joined by parallel spokes, unit budgets."""
    return build_leveled(
        [outer_w] * 3 + [inner_w] * 3, [1] * 6, [[0, 1, 2], [3, 4, 5]], [(0, 3), (1, 4), (2, 5)], B
    )


def random_knapsack(rng, n, capacity=None, max_value=50, max_size=15) -> KnapsackInstance:
    items = tuple((rng.randint(0, max_value), rng.randint(1, max_size)) for _ in range(n))
    capacity = rng.randint(0, 40) if capacity is None else capacity
    return KnapsackInstance(items, capacity)


FAMILIES = (
    "tree", "forest", "cycle", "graph", "claw-free", "interval",
    "planar", "mbf-tight", "mwbrf-bad", "knapsack",
)


def generate(family: str, params: dict[str, Any], seed: int = 0):
    """Build one instance of ``family``: an Instance, RootedTree,
    IntervalInstance, LeveledPlanarInstance or KnapsackInstance."""
    rng = random.Random(seed)
    P = dict(params)
    try:
        if family == "tree":
            inst = random_tree(rng, int(P.get("n", 10)), B=P.get("B"))
            return root_tree(inst, 0)
        if family == "forest":
            return random_forest(rng, int(P.get("n", 10)), int(P.get("trees", 3)), B=P.get("B"))
        if family == "cycle":
            return random_cycle(rng, int(P.get("n", 8)), B=P.get("B"))
        if family == "graph":
            return random_graph(rng, int(P.get("n", 10)), float(P.get("p", 0.3)), B=P.get("B"))
        if family == "claw-free":
            return random_claw_free(rng, int(P.get("n", 10)), int(P.get("d", 2)), B=P.get("B"))
        if family == "interval":
            n = int(P.get("n", 10))
            B = int(P["B"]) if P.get("B") is not None else rng.randint(0, 20)
            return IntervalInstance(tuple(random_intervals(rng, n)), B)
        if family == "planar":
            sizes = P.get("levels", [4, 4])
            if isinstance(sizes, str):
                sizes = [int(x) for x in sizes.split(",")]
            return random_simply_nested(rng, sizes, B=P.get("B"))
        if family == "mbf-tight":
            return mbf_tight(int(P.get("d", 3)))
        if family == "mwbrf-bad":
            return mwbrf_bad(int(P.get("d", 2)), int(P.get("M", 4)))
        if family == "knapsack":
            return random_knapsack(rng, int(P.get("n", 10)), P.get("capacity"))
    except (ValueError, TypeError) as exc:
        raise BadParams(str(exc)) from exc
    raise BadParams(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


__all__ = [
    "FAMILIES", "generate", "mbf_tight", "mwbrf_bad", "prism", "random_claw_free",
    "random_cycle", "random_forest", "random_graph", "random_intervals",
    "random_knapsack", "random_simply_nested", "random_tree", "RootedTree",
]
