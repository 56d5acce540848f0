from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabbing.errors import GeometryError, KernelInvariantError
from stabbing.generators import BoxConfig, random_boxes, random_rectangle_instance, random_square_instance
from stabbing.geometry import AXIS_DIRECTIONS, HORIZONTAL, Instance2D, Line, square
from stabbing.oracle import brute_force_stab, verify_solution
from stabbing.solver import (
    SolverConfig,
    candidate_lines,
    check_shallowness,
    data_reduce,
    find_branch_line,
    solve_kernel,
    stab_fpt,
)


def inst(squares, k, c=1, closed=True):
    return Instance2D(tuple(square(x, y, 1, closed) for x, y in squares), AXIS_DIRECTIONS, k, c)


def test_config_derives_kernel_bound():
    cfg = SolverConfig.for_instance(inst([(0, 0)], k=3, c=2))
    assert (cfg.k, cfg.c, cfg.r, cfg.max_kernel_objects) == (3, 2, 2, 18)


def test_data_reduce_examples():
    column = inst([(0, y) for y in (0, 2, 4, 6, 8)], k=2)
    assert len(data_reduce(column).objects) == 3
    spread = inst([(0, 0), (2, 3), (5, 7)], k=1)
    assert data_reduce(spread) == spread
    both = inst([(0, 0), (0, 2), (0, 4), (5, 10), (7, 10), (9, 10)], k=1)
    assert data_reduce(both).objects == both.objects[:2] + both.objects[3:5]


def test_find_branch_line_examples():
    assert find_branch_line(inst([], k=1)) is None
    stacked = inst([(0, 0), (2, 0), (4, 0)], k=1)
    # vertical lines stab one square each; the first horizontal class covering all three wins
    assert find_branch_line(stacked) == Line.horizontal(0)
    sparse = inst([(0, 0), (2, 2)], k=1)
    assert find_branch_line(sparse) is None


def test_candidate_lines_examples():
    one = inst([(0, 0)], k=1)
    assert candidate_lines(one, Line.horizontal(F(1, 2))) == [Line.horizontal(0), Line.horizontal(1)]
    two = inst([(0, 0), (0, F(1, 2))], k=1)
    got = candidate_lines(two, Line.horizontal(F(3, 4)))
    assert [l.offset for l in got] == [0, F(1, 2), 1, F(3, 2)]
    dup = inst([(0, 0), (0, 0)], k=1)
    assert len(candidate_lines(dup, Line.horizontal(0))) == 2
    with pytest.raises(GeometryError):
        candidate_lines(one, Line.horizontal(5))


def test_candidate_lines_open_objects_use_class_representatives():
    two = inst([(0, 0), (3, F(1, 2))], k=1, closed=False)
    got = candidate_lines(two, Line.horizontal(F(3, 4)))
    assert [l.offset for l in got] == [F(1, 4), F(3, 4), F(5, 4)]


def test_stab_fpt_examples():
    empty = stab_fpt(inst([], k=0))
    assert empty.yes and len(empty.witness) == 0
    assert stab_fpt(inst([(0, 0)], k=0)).decision == "NO"
    r = stab_fpt(random_square_instance(7, count=12, k=3))
    assert r.yes == brute_force_stab(random_square_instance(7, count=12, k=3)).yes


def test_solve_kernel_examples():
    assert solve_kernel(inst([], k=2)).yes
    # c*k^2 + 1 = 5 squares in general position
    crowd = inst([(3 * i, 3 * i) for i in range(5)], k=2)
    res = solve_kernel(crowd)
    assert not res.yes and res.stats.kernels[0].m == 5 and not res.stats.kernels[0].accepted
    far = inst([(0, 0), (5, 5)], k=2)
    res = solve_kernel(far)
    assert res.yes and len(res.witness) == 2 and verify_solution(far, res.witness)


def test_kernel_invariant_reports_underestimated_c():
    # many overlapping squares break the translate/shallowness precondition
    objs = tuple(square(F(i, 8), F(i, 8), 1) for i in range(4))
    bad = Instance2D(objs, AXIS_DIRECTIONS, 2, 1)
    with pytest.raises(KernelInvariantError, match="2rck"):
        solve_kernel(bad)


def test_check_shallowness_examples():
    assert check_shallowness(inst([(0, 0), (2, 2)], k=1)) == 1
    overlap = Instance2D((square(0, 0, 2), square(1, 1, 2)), AXIS_DIRECTIONS, 1)
    assert check_shallowness(overlap) == 2
    assert check_shallowness(inst([], k=1)) == 1
    with pytest.raises(GeometryError, match="r=1"):
        check_shallowness(Instance2D((), (HORIZONTAL,), 1))


@pytest.mark.parametrize("seed", range(0, 500, 7))
def test_reduce_sound_and_solver_matches_oracle(seed):
    I = random_square_instance(seed)
    truth = brute_force_stab(I).yes
    assert brute_force_stab(data_reduce(I)).yes == truth
    res = stab_fpt(I)
    assert res.yes == truth
    if res.yes:
        assert verify_solution(I, res.witness)
    assert res.stats.max_depth <= I.k
    bound = 2 * (2 * I.c * I.k + 1)
    assert all(w <= bound for w in res.stats.branch_widths)


@pytest.mark.parametrize("seed", range(0, 200, 9))
def test_rectangles_with_measured_c(seed):
    I = random_rectangle_instance(seed)
    if I.objects:
        I = I.with_budget(c=check_shallowness(I))
    assert stab_fpt(I).yes == brute_force_stab(I).yes


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), min_size=1, max_size=9, unique=True),
    st.integers(1, 3),
    st.booleans(),
)
def test_open_grid_squares_match_oracle(cells, k, closed):
    # translates on a coarse grid: disjoint by construction
    I = inst([(2 * x, 2 * y) for x, y in cells], k=k, closed=closed)
    res = stab_fpt(I)
    assert res.yes == brute_force_stab(I).yes
    if res.yes:
        assert verify_solution(I, res.witness)


@pytest.mark.parametrize("seed", range(60))
def test_open_translates_match_oracle(seed):
    rng = random.Random(seed)
    cfg = BoxConfig(count=rng.randint(1, 11), width=F(3, 2), closed=False, span=6, step=F(1, 4))
    I = Instance2D(tuple(random_boxes(rng, cfg)), AXIS_DIRECTIONS, rng.randint(1, 3), 1)
    I = I.with_budget(c=check_shallowness(I))
    res = stab_fpt(I)
    assert res.yes == brute_force_stab(I).yes
    if res.yes:
        assert verify_solution(I, res.witness)
