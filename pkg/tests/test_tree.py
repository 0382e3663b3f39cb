import pytest
from hypothesis import given

from mwbis.core import Instance, Solution, brute_force_mwbis, check_solution
from mwbis.errors import NotACycle, NotATree
from mwbis.generate import mbf_tight, random_cycle, random_forest, random_tree
from mwbis.tree import (
    TreeTable,
    compute_budgeted_ind_set,
    cycle_order,
    fill_table,
    forest_components,
    opt_fill,
    root_tree,
    solve_cycle,
    solve_forest,
    solve_forest_instance,
    solve_tree,
)

from conftest import rng_from, seeds

PATH = Instance.from_edges([5, 4, 5], [2, 3, 2], [(0, 1), (1, 2)], 4)


def test_leaf_cells():
    tree = root_tree(Instance.from_edges([7], [3], [], 3))
    D = TreeTable(3)
    cells = [opt_fill(tree, 0, j, D) for j in range(4)]
    assert (cells[2].w, cells[2].f) == (0, 0)
    assert (cells[3].w, cells[3].f) == (7, 1)


def test_star_center_cell():
    star = Instance.from_edges([1, 1, 1, 1], [1, 2, 2, 2], [(0, 1), (0, 2), (0, 3)], 5)
    D = fill_table(root_tree(star, 0), 5)
    cell = D.cell(0, 5)
    # including the center gives 1 (no grandchildren), two leaves give 2
    assert (cell.w, cell.f) == (2, 0)


def test_path_cell_split():
    tree = root_tree(PATH, 2)
    D = fill_table(tree, 4)
    cell = D.cell(2, 4)
    assert (cell.w, cell.f) == (10, 1)
    assert dict(cell.split) == {0: 2}
    assert compute_budgeted_ind_set(D, 2, 4) == {0, 2}


def test_retrieval_edge_cases():
    tree = root_tree(PATH, 2)
    D = fill_table(tree, 4)
    assert compute_budgeted_ind_set(D, 1, 0) == set()
    assert compute_budgeted_ind_set(D, 0, 2) == {0}


def test_single_vertex_tree():
    tree = root_tree(Instance.from_edges([9], [1], [], 1))
    assert solve_tree(tree) == Solution((0,), 9, 1)


def test_mbf_tight_star_optimum_is_the_leaves():
    sol = solve_tree(root_tree(mbf_tight(3)))
    assert sol.vertices == (1, 2, 3) and sol.total_weight == 3000


def test_rooting_invariants():
    rng = rng_from(5)
    inst = random_tree(rng, 12)
    tree = root_tree(inst, 4)
    assert tree.postorder[-1] == 4
    pos = {v: k for k, v in enumerate(tree.postorder)}
    assert sorted(pos) == list(range(12))
    for v, kids in tree.children.items():
        for c in kids:
            assert tree.parent[c] == v and pos[c] < pos[v]


def test_not_a_tree():
    tri = Instance.from_edges([1] * 3, [1] * 3, [(0, 1), (1, 2), (0, 2)], 3)
    with pytest.raises(NotATree):
        root_tree(tri)


@given(seeds)
def test_tree_matches_oracle(seed):
    rng = rng_from(seed)
    n = rng.randint(1, 11)
    inst = random_tree(rng, n)
    sol = solve_tree(root_tree(inst, rng.randrange(n)))
    check_solution(inst, sol)
    assert sol.total_weight == brute_force_mwbis(inst).total_weight


def test_forest_examples():
    two = Instance.from_edges([3, 4], [2, 2], [], 2)
    assert solve_forest_instance(two) == Solution((1,), 4, 2)
    paths = Instance.from_edges([1] * 4, [1] * 4, [(0, 1), (2, 3)], 2)
    assert solve_forest_instance(paths).total_weight == 2
    tree = root_tree(PATH, 0)
    assert solve_forest([tree]) == solve_tree(tree)
    assert solve_forest([]) == Solution((), 0, 0)


@given(seeds)
def test_forest_matches_oracle(seed):
    rng = rng_from(seed)
    n = rng.randint(1, 11)
    inst = random_forest(rng, n, rng.randint(1, n))
    assert len(forest_components(inst)) >= 1
    sol = solve_forest_instance(inst)
    check_solution(inst, sol)
    assert sol.total_weight == brute_force_mwbis(inst).total_weight


def test_cycle_examples():
    c4 = Instance.from_edges([3, 5, 3, 5], [1] * 4, [(0, 1), (1, 2), (2, 3), (3, 0)], 2)
    assert solve_cycle(c4) == Solution((1, 3), 10, 2)
    c3 = Instance.from_edges([1] * 3, [1] * 3, [(0, 1), (1, 2), (2, 0)], 3)
    assert solve_cycle(c3).total_weight == 1
    c5 = Instance.from_edges([2] * 5, [1] * 5, [(v, (v + 1) % 5) for v in range(5)], 2)
    assert solve_cycle(c5).total_weight == 4


def test_cycle_order_rejects_non_cycles():
    with pytest.raises(NotACycle):
        cycle_order(PATH)
    two_triangles = Instance.from_edges(
        [1] * 6, [1] * 6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)], 2
    )
    with pytest.raises(NotACycle):
        cycle_order(two_triangles)


@given(seeds)
def test_cycle_matches_oracle(seed):
    rng = rng_from(seed)
    inst = random_cycle(rng, rng.randint(3, 11))
    sol = solve_cycle(inst)
    check_solution(inst, sol)
    assert sol.total_weight == brute_force_mwbis(inst).total_weight
