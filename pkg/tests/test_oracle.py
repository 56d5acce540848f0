from __future__ import annotations

from fractions import Fraction as F
from itertools import combinations

import pytest

from stabbing.errors import GuardExceededError
from stabbing.generators import random_square_instance
from stabbing.geometry import AXIS_DIRECTIONS, Instance2D, Line, Solution, canonical_lines, square, stab_set
from stabbing.oracle import brute_force_stab, dominance_filter, verify_solution


def inst(squares, k):
    return Instance2D(tuple(square(x, y, 1) for x, y in squares), AXIS_DIRECTIONS, k)


def test_oracle_examples():
    assert brute_force_stab(inst([], 0)).yes
    assert not brute_force_stab(inst([(0, 0), (2, 2)], 1)).yes
    res = brute_force_stab(inst([(0, 0), (2, F(1, 2)), (4, 0)], 1))
    assert res.yes and res.witness.lines[0].offset in (F(1, 2), 1)


def test_guard_counts_filtered_lines():
    # 30 squares on a diagonal: 120 canonical lines but every stab set is a singleton,
    # so the filter leaves 30 lines and C(30, 5) is small enough
    assert not brute_force_stab(inst([(2 * i, 2 * i) for i in range(30)], 5)).yes
    # staggered heights: horizontal lines stab distinct runs of three squares
    big = inst([(2 * i, F(i, 2)) for i in range(150)], 5)
    with pytest.raises(GuardExceededError, match="too large for oracle"):
        brute_force_stab(big)


def test_dominance_examples():
    twins = inst([(0, 0), (0, 0)], 1)
    rep = dominance_filter(twins)
    # every canonical line stabs both twins, so the first one dominates the rest
    assert rep.kept == (Line.horizontal(0),)
    assert len(rep.removed) == 3
    stacked = Instance2D((square(0, 0, 1), square(3, 1, 1), square(6, F(1, 2), 1)), AXIS_DIRECTIONS, 1)
    rep = dominance_filter(stacked)
    removed = {l for l, _ in rep.removed}
    assert Line.horizontal(0) in removed and Line.horizontal(1) in rep.kept
    for line, dom in rep.removed:
        assert dom is None or stab_set(line, stacked) <= stab_set(dom, stacked)


def test_verify_solution_examples():
    assert verify_solution(inst([], 0), Solution(()))
    assert not verify_solution(inst([(0, 0)], 1), Solution(()))
    assert verify_solution(inst([(0, 0)], 1), Solution((Line.horizontal(1),)))
    assert not verify_solution(inst([(0, 0)], 0), Solution((Line.horizontal(1),)))


@pytest.mark.parametrize("seed", range(100))
def test_monotone_in_budget(seed):
    I = random_square_instance(seed, k=2)
    if brute_force_stab(I).yes:
        assert brute_force_stab(I.with_budget(k=3)).yes


def _unfiltered(I):
    lines = [l for d in I.directions for l in canonical_lines(I.objects, d)]
    everything = frozenset(range(len(I.objects)))
    for size in range(0, I.k + 1):
        for combo in combinations(lines, size):
            if frozenset().union(*(stab_set(l, I) for l in combo)) == everything:
                return True
    return False


@pytest.mark.parametrize("seed", range(0, 200, 4))
def test_filter_preserves_decision(seed):
    I = random_square_instance(seed, count=8)
    assert brute_force_stab(I).yes == _unfiltered(I)
