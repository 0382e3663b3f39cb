"""Exact MWBIS on trees, forests and cycles.

The tree solver fills a table ``D`` in postorder: cell ``(i, j)`` holds the
best weight of a ``j``-budgeted independent set inside the subtree rooted
at ``i``, a flag saying whether ``i`` itself is taken, and the budget split
handed to the grandchildren (taken) or children (not taken). A second,
top-down pass replays the stored splits to recover the vertex set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .alloc import AllocTable, alloc
from .core import Instance, Solution, better, check_cell_guard, make_solution
from .errors import NotACycle, NotATree, VertexOutOfRange


@dataclass(frozen=True)
class RootedTree:
    instance: Instance
    root: int
    parent: dict[int, Optional[int]]
    children: dict[int, tuple[int, ...]]
    postorder: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.postorder

    def grandchildren(self, v: int) -> tuple[int, ...]:
        return tuple(g for c in self.children[v] for g in self.children[c])


def root_tree(inst: Instance, root: int = 0, within: Iterable[int] | None = None) -> RootedTree:
    """Root the tree containing ``root`` (restricted to ``within`` if given)."""
    if not 0 <= root < inst.n:
        raise VertexOutOfRange(f"root {root} >= n={inst.n}")
    allowed = set(range(inst.n)) if within is None else set(within)
    if root not in allowed:
        raise NotATree(f"root {root} is not among the allowed vertices")
    parent: dict[int, Optional[int]] = {root: None}
    order = [root]
    for v in order:
        for u in inst.adjacency[v]:
            if u not in allowed or u == parent[v]:
                continue
            if u in parent:
                raise NotATree(f"cycle through edge ({v}, {u})")
            parent[u] = v
            order.append(u)
    children = {v: tuple(u for u in inst.adjacency[v] if u in allowed and parent.get(u) == v and u != parent[v])
                for v in order}
    # iterative postorder
    post: list[int] = []
    stack = [(root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            post.append(v)
            continue
        stack.append((v, True))
        for c in reversed(children[v]):
            stack.append((c, False))
    return RootedTree(inst, root, parent, children, tuple(post))


def forest_components(inst: Instance) -> list[RootedTree]:
    """Split a forest into rooted trees, each rooted at its smallest vertex."""
    seen: set[int] = set()
    trees = []
    for v in range(inst.n):
        if v in seen:
            continue
        t = root_tree(inst, v)
        seen.update(t.postorder)
        trees.append(t)
    return trees


@dataclass
class TreeCell:
    w: int
    f: int
    split: tuple[tuple[int, int], ...]


@dataclass
class TreeTable:
    B: int
    cells: dict[int, list[TreeCell]] = field(default_factory=dict)
    _alloc_cache: dict = field(default_factory=dict, repr=False)

    def cell(self, i: int, j: int) -> TreeCell:
        return self.cells[i][j]

    def weights(self, i: int) -> list[int]:
        return [c.w for c in self.cells[i]]


def _subtree_alloc(tree: RootedTree, D: TreeTable, i: int, which: str):
    key = (i, which)
    if key not in D._alloc_cache:
        members = tree.grandchildren(i) if which == "g" else tree.children[i]
        D._alloc_cache[key] = (members, AllocTable([D.weights(m) for m in members], D.B))
    return D._alloc_cache[key]


def opt_fill(tree: RootedTree, i: int, j: int, D: TreeTable) -> TreeCell:
    """Fill and return cell ``D(i, j)``.

    Every descendant of ``i`` must already be filled for all budgets
    ``0..D.B`` (postorder). Equal options resolve to leaving ``i`` out.
    """
    inst = tree.instance
    w_i, b_i = inst.weight[i], inst.budget[i]
    row = D.cells.setdefault(i, [])
    assert len(row) == j, "cells of one row must be filled in budget order"
    if not tree.children[i]:
        cell = TreeCell(w_i, 1, ()) if j >= b_i else TreeCell(0, 0, ())
        row.append(cell)
        return cell

    s1, split1 = None, ()
    if j >= b_i:
        members, table = _subtree_alloc(tree, D, i, "g")
        s1 = table.value(j - b_i)
        split1 = tuple(zip(members, table.allocation(j - b_i)))
    members, table = _subtree_alloc(tree, D, i, "c")
    s2 = table.value(j)
    split2 = tuple(zip(members, table.allocation(j)))

    if s1 is not None and s1 + w_i > s2:
        cell = TreeCell(s1 + w_i, 1, tuple(x for x in split1 if x[1]))
    else:
        cell = TreeCell(s2, 0, tuple(x for x in split2 if x[1]))
    row.append(cell)
    return cell


def fill_table(tree: RootedTree, B: int) -> TreeTable:
    check_cell_guard(len(tree.postorder), B)
    D = TreeTable(B)
    for i in tree.postorder:
        for j in range(B + 1):
            opt_fill(tree, i, j, D)
    return D


def compute_budgeted_ind_set(D: TreeTable, i: int, j: int) -> set[int]:
    """Replay the stored splits top-down from cell ``(i, j)``."""
    chosen: set[int] = set()
    stack = [(i, j)]
    while stack:
        v, budget = stack.pop()
        if budget == 0:
            continue
        cell = D.cell(v, budget)
        if cell.f == 1:
            chosen.add(v)
        stack.extend(cell.split)
    return chosen


def solve_tree(tree: RootedTree, B: int | None = None) -> Solution:
    B = tree.instance.B if B is None else B
    D = fill_table(tree, B)
    chosen = compute_budgeted_ind_set(D, tree.root, B)
    sol = make_solution(tree.instance, chosen)
    assert sol.total_weight == D.cell(tree.root, B).w
    return sol


def solve_forest(forest: Sequence[RootedTree], B: int | None = None) -> Solution:
    if not forest:
        return Solution((), 0, 0)
    inst = forest[0].instance
    B = inst.B if B is None else B
    check_cell_guard(sum(len(t.postorder) for t in forest), B)
    tables = [fill_table(t, B) for t in forest]
    res = alloc([D.weights(t.root) for D, t in zip(tables, forest)], B)
    chosen: set[int] = set()
    for D, t, share in zip(tables, forest, res.allocation):
        chosen |= compute_budgeted_ind_set(D, t.root, share)
    sol = make_solution(inst, chosen)
    assert sol.total_weight == res.value
    return sol


def solve_forest_instance(inst: Instance) -> Solution:
    return solve_forest(forest_components(inst), inst.B)


def cycle_order(inst: Instance) -> list[int]:
    """Vertices of a single cycle in traversal order starting at 0."""
    if inst.n < 3:
        raise NotACycle(f"a cycle needs at least 3 vertices, got {inst.n}")
    for v in range(inst.n):
        if len(inst.adjacency[v]) != 2:
            raise NotACycle(f"vertex {v} has degree {len(inst.adjacency[v])}")
    order = [0]
    prev, cur = None, 0
    while True:
        a, b = inst.adjacency[cur]
        nxt = b if a == prev else a
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != inst.n:
        raise NotACycle("graph is disconnected")
    return order


def solve_cycle(inst: Instance, B: int | None = None) -> Solution:
    """Best over the ``n`` paths obtained by deleting one vertex each."""
    B = inst.B if B is None else B
    order = cycle_order(inst)
    n = len(order)
    best = None
    for pos, v in enumerate(order):
        path = [order[(pos + s) % n] for s in range(1, n)]
        sol = solve_tree(root_tree(inst, path[0], within=path), B)
        if better(sol, best):
            best = sol
    return best
