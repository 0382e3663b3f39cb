import itertools

import pytest
from hypothesis import given, strategies as st

from mwbis.core import (
    Instance,
    Solution,
    brute_force_mwbis,
    check_solution,
    is_independent,
    make_solution,
    to_milli,
    validate_instance,
)
from mwbis.errors import (
    AsymmetricAdjacency,
    InstanceTooLarge,
    NegativeWeight,
    NonPositiveBudget,
    SelfLoop,
    ValidationError,
    VertexOutOfRange,
)
from mwbis.generate import random_graph

from conftest import rng_from, seeds

PATH = Instance.from_edges([5, 4, 5], [2, 3, 2], [(0, 1), (1, 2)], 4)


def naive_best(inst):
    """Straight itertools enumeration, weight only."""
    best = 0
    for r in range(inst.n + 1):
        for S in itertools.combinations(range(inst.n), r):
            if sum(inst.budget[v] for v in S) > inst.B:
                continue
            if any(b in inst.adjacency[a] for a, b in itertools.combinations(S, 2)):
                continue
            best = max(best, sum(inst.weight[v] for v in S))
    return best


def test_single_vertex_zero_budget_is_valid():
    inst = Instance.from_edges([1], [1], [], 0)
    assert validate_instance(inst) is inst


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        Instance.from_edges([1], [1], [(0, 0)], 1)


def test_nonpositive_budget_rejected():
    with pytest.raises(NonPositiveBudget):
        Instance.from_edges([1, 1, 1], [1, 1, 0], [], 3)


def test_other_validation_errors():
    with pytest.raises(NegativeWeight):
        Instance.from_edges([-1], [1], [], 1)
    with pytest.raises(VertexOutOfRange):
        Instance.from_edges([1, 1], [1, 1], [(0, 2)], 1)
    with pytest.raises(AsymmetricAdjacency):
        validate_instance(Instance(2, ((1,), ()), (1, 1), (1, 1), 1))
    with pytest.raises(ValidationError):
        Instance.from_edges([1], [1], [], -1)


def test_is_independent():
    assert is_independent(PATH, {0, 2})
    assert not is_independent(PATH, {0, 1})
    assert is_independent(PATH, set())
    with pytest.raises(VertexOutOfRange):
        is_independent(PATH, {3})


def test_brute_force_path():
    sol = brute_force_mwbis(PATH)
    assert sol == Solution((0, 2), 10, 4)


def test_brute_force_zero_budget():
    assert brute_force_mwbis(PATH.with_budget(0)) == Solution((), 0, 0)


def test_brute_force_triangle_tie_break():
    tri = Instance.from_edges([1000] * 3, [1] * 3, [(0, 1), (1, 2), (0, 2)], 3)
    assert brute_force_mwbis(tri) == Solution((0,), 1000, 1)


def test_brute_force_prefers_cheaper_on_equal_weight():
    inst = Instance.from_edges([3, 3], [2, 1], [(0, 1)], 5)
    assert brute_force_mwbis(inst).vertices == (1,)


def test_oracle_cap():
    inst = Instance.from_edges([1] * 5, [1] * 5, [], 5)
    with pytest.raises(InstanceTooLarge):
        brute_force_mwbis(inst, cap=4)


@given(seeds)
def test_brute_force_matches_naive_enumeration(seed):
    rng = rng_from(seed)
    inst = random_graph(rng, rng.randint(0, 9), rng.random())
    sol = brute_force_mwbis(inst)
    check_solution(inst, sol)
    assert sol.total_weight == naive_best(inst)


def test_to_milli():
    assert to_milli(1) == 1000
    assert to_milli(2.5) == 2500
    assert to_milli("0.0015") == 2  # round half even
    assert to_milli(0.1) == 100


def test_make_solution_and_helpers():
    sol = make_solution(PATH, [2, 0, 2])
    assert sol == Solution((0, 2), 10, 4)
    assert len(sol) == 2
    sub, old = PATH.induced([2, 1])
    assert old == [2, 1] and sub.adjacency == ((1,), (0,))
    assert PATH.unweighted().weight == (1000, 1000, 1000)
    assert PATH.edges() == [(0, 1), (1, 2)]


def test_check_solution_catches_over_budget():
    with pytest.raises(AssertionError):
        check_solution(PATH.with_budget(3), make_solution(PATH, [0, 2]))
