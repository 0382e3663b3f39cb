import math

import pytest
from hypothesis import given

from mwbis.core import Instance, brute_force_mwbis, check_solution
from mwbis.errors import TooLargeForExactCheck, ValidationError
from mwbis.generate import mbf_tight, mwbrf_bad, random_claw_free, random_graph
from mwbis.greedy import StopReason, claw_number, max_degree, mbf, mwbrf, verify_claw_free

from conftest import rng_from, seeds


def star(d):
    return Instance.from_edges([1000] * (d + 1), [1] * (d + 1), [(0, j) for j in range(1, d + 1)], d)


C5 = Instance.from_edges([1000] * 5, [1] * 5, [(v, (v + 1) % 5) for v in range(5)], 2)


def test_mbf_tight_star_picks_only_the_center():
    trace = mbf(mbf_tight(3))
    assert trace.picks == (0,)
    assert trace.stop_reason is StopReason.EXHAUSTED
    assert len(brute_force_mwbis(mbf_tight(3))) == 3


def test_mbf_edgeless_takes_everything():
    inst = Instance.from_edges([1000] * 4, [1] * 4, [], 4)
    assert mbf(inst).picks == (0, 1, 2, 3)


def test_mbf_c5():
    assert len(mbf(C5).picks) == 2


def test_mbf_stops_at_first_unaffordable_vertex():
    # order by budget: 0 (b=1), 1 (b=2), 2 (b=3); after 0 and 1 only 1 unit is left
    inst = Instance.from_edges([1000] * 3, [1, 2, 3], [], 4)
    trace = mbf(inst)
    assert trace.picks == (0, 1)
    assert trace.remaining == (4, 3, 1)
    assert trace.stop_reason is StopReason.BUDGET_SHORT


def test_mbf_checks_the_first_vertex_too():
    inst = Instance.from_edges([1000], [2], [], 1)
    assert mbf(inst).picks == ()


def test_keep_scanning_extension_is_a_superset():
    inst = Instance.from_edges([1000] * 3, [1, 3, 3], [(0, 1)], 4)
    assert mbf(inst).picks == (0, 2)
    rng = rng_from(11)
    for _ in range(50):
        g = random_graph(rng, 10, 0.3)
        assert set(mbf(g).picks) <= set(mbf(g, keep_scanning=True).picks)


@given(seeds)
def test_mbf_solution_is_feasible(seed):
    rng = rng_from(seed)
    inst = random_graph(rng, rng.randint(0, 12), rng.random())
    trace = mbf(inst, keep_scanning=rng.random() < 0.5)
    check_solution(inst, trace.solution(inst))
    assert list(trace.order) == sorted(range(inst.n), key=lambda v: (inst.budget[v], v))


@given(seeds)
def test_mbf_claw_free_bound(seed):
    rng = rng_from(seed)
    d = rng.choice([1, 2, 3])
    inst = random_claw_free(rng, rng.randint(1, 10), d, B=rng.randint(0, 15))
    opt = len(brute_force_mwbis(inst))
    assert len(mbf(inst).picks) >= math.ceil(opt / d)


def test_mwbrf_gadget():
    inst = mwbrf_bad(2, 4)
    assert inst.weight == (1000, 2000, 2000) and inst.budget == (1, 4, 4) and inst.B == 8
    assert mwbrf(inst) == {0}
    assert brute_force_mwbis(inst).total_weight == 4000


def test_mwbrf_small_cases():
    assert mwbrf(Instance.from_edges([5], [1], [], 1)) == {0}
    two = Instance.from_edges([3, 4], [1, 2], [], 3)
    assert mwbrf(two) == {0, 1}


@given(seeds)
def test_mwbrf_is_feasible(seed):
    rng = rng_from(seed)
    inst = random_graph(rng, rng.randint(0, 12), rng.random())
    sol = mwbrf(inst)
    assert sum(inst.budget[v] for v in sol) <= inst.B
    assert all(u not in sol for v in sol for u in inst.adjacency[v])


def test_verify_claw_free_examples():
    assert not verify_claw_free(star(3), 2)
    assert verify_claw_free(star(3), 3)
    tri = Instance.from_edges([1] * 3, [1] * 3, [(0, 1), (1, 2), (0, 2)], 1)
    assert verify_claw_free(tri, 1)
    with pytest.raises(ValidationError):
        verify_claw_free(tri, 0)
    with pytest.raises(TooLargeForExactCheck):
        verify_claw_free(star(25), 2)


@given(seeds)
def test_verify_claw_free_agrees_with_exhaustive_count(seed):
    rng = rng_from(seed)
    inst = random_graph(rng, rng.randint(1, 10), rng.random())
    c = claw_number(inst)
    for d in range(1, 5):
        assert verify_claw_free(inst, d) == (c <= d)


def test_max_degree():
    assert max_degree(Instance.from_edges([], [], [], 0)) == 0
    c4 = Instance.from_edges([1] * 4, [1] * 4, [(0, 1), (1, 2), (2, 3), (3, 0)], 1)
    assert max_degree(c4) == 2
    assert max_degree(star(5)) == 5
