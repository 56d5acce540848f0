"""Acceptance checks, one test per numbered check.

Each test records a ``[N] ... PASS|FAIL`` line that is printed at the end of
the session (and also to stdout, visible with ``pytest -s``).
"""

from __future__ import annotations

import math
import random
import statistics
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import ACCEPTANCE
from stabbing import balls as B
from stabbing import squares as S
from stabbing.generators import (
    all_digraphs,
    all_graphs,
    planted_square_instance,
    random_digraph,
    random_graph,
    random_rectangle_instance,
    random_square_instance,
)
from stabbing.geometry import LinearMap2, apply_map, pairwise_disjoint, robustness_delta
from stabbing.oracle import brute_force_stab, verify_solution
from stabbing.solver import check_shallowness, stab_fpt

MARGIN_FLOOR = 1e-9


def record(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{num:2d}] {title}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE[num] = line
    print(line)


def clique_family() -> list[S.Digraph]:
    """All digraphs on 3 vertices followed by 10 seeded ones on 4."""
    return list(all_digraphs(3)) + [random_digraph(random.Random(1000 + s), 4) for s in range(10)]


_kernel_log: list = []


def test_solver_matches_oracle_on_unit_squares():
    start = time.perf_counter()
    mismatches = bad_witness = yes = 0
    _kernel_log.clear()
    for seed in range(500):
        inst = random_square_instance(seed)
        res = stab_fpt(inst)
        _kernel_log.extend((inst, e) for e in res.stats.kernels)
        if res.yes != brute_force_stab(inst).yes:
            mismatches += 1
        if res.yes:
            yes += 1
            bad_witness += not verify_solution(inst, res.witness)
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and bad_witness == 0 and elapsed < 60
    record(1, "solver vs oracle, 500 unit-square instances", ok,
           f"mismatches={mismatches} bad_witnesses={bad_witness} yes={yes} time={elapsed:.1f}s")
    assert ok


def test_solver_matches_oracle_on_rectangles():
    mismatches = bad_witness = 0
    cs = set()
    for seed in range(200):
        inst = random_rectangle_instance(seed)
        if inst.objects:
            inst = inst.with_budget(c=check_shallowness(inst))
        cs.add(inst.c)
        res = stab_fpt(inst)
        mismatches += res.yes != brute_force_stab(inst).yes
        if res.yes:
            bad_witness += not verify_solution(inst, res.witness)
    ok = mismatches == 0 and bad_witness == 0
    record(2, "solver vs oracle, 200 2x1-rectangle instances", ok,
           f"mismatches={mismatches} bad_witnesses={bad_witness} measured c values={sorted(cs)}")
    assert ok


def test_unit_squares_are_one_shallow():
    values = [check_shallowness(random_square_instance(seed)) for seed in range(100)]
    ok = all(v == 1 for v in values)
    record(3, "shallowness of disjoint unit squares", ok, f"max measured c={max(values)}")
    assert ok


def test_kernel_size_and_branching_bound():
    if not _kernel_log:
        for seed in range(500):
            inst = random_square_instance(seed)
            _kernel_log.extend((inst, e) for e in stab_fpt(inst).stats.kernels)
    size_bad = width_bad = 0
    worst = 0.0
    for inst, e in _kernel_log:
        if e.m > e.c * e.k**2 and e.accepted:
            size_bad += 1
        if e.min_lines is not None:
            bound = 2 * e.r * e.c * e.k
            width_bad += e.min_lines > bound
            worst = max(worst, e.min_lines / bound)
    ok = size_bad == 0 and width_bad == 0
    record(4, "kernel size and min |L(o)| bound", ok,
           f"kernel entries={len(_kernel_log)} oversize accepted={size_bad} over bound={width_bad} "
           f"max min|L(o)|/(2rck)={worst:.2f}")
    assert ok


def test_gadget_lemmas():
    start = time.perf_counter()
    parts = {}
    for n in (3, 4):
        misses = S.grid_misses(n)
        parts[f"adjacency n={n}"] = all(S.adjacency_lemma_holds(G, misses) for G in all_digraphs(n))
        parts[f"diagonal n={n}"] = S.diagonal_lemma_holds(n)
    for n in (3, 4, 5):
        parts[f"consistency n={n}"] = S.consistency_lemma_holds(n)
    elapsed = time.perf_counter() - start
    ok = all(parts.values()) and elapsed < 10
    failed = [name for name, v in parts.items() if not v]
    record(5, "gadget lemmas", ok, f"failed={failed or 'none'} time={elapsed:.1f}s")
    assert ok


def test_clique_reduction_end_to_end():
    start = time.perf_counter()
    wrong = []
    yes = 0
    for G in clique_family():
        want = S.has_clique(G, 2)
        yes += want
        if S.strip_verify(*S.build_s(G, 2)) != want:
            wrong.append((G.n, sorted(G.edges)))
    elapsed = time.perf_counter() - start
    ok = not wrong and elapsed < 15 * 60
    record(6, "clique reduction, 64 digraphs on 3 vertices + 10 on 4", ok,
           f"disagreements={len(wrong)} cliques={yes} time={elapsed:.1f}s")
    assert ok, wrong[:3]


def test_shrunk_squares_agree():
    wrong = 0
    for G in all_digraphs(3):
        a = S.strip_verify(*S.build_s(G, 2))
        b = S.strip_verify(*S.build_s_star(G, 2, strict=False))
        wrong += a != b
    ok = wrong == 0
    record(7, "unit-side vs shrunk squares on 3 vertices", ok, f"disagreements={wrong}")
    assert ok


def test_robustness_bounds():
    low_s = low_star = 0
    min_s = min_star = None
    for G in clique_family():
        n = G.n
        scaled = apply_map(LinearMap2.scaling(Fraction(1, n)), S.build_s(G, 2)[0])
        ds = robustness_delta(scaled.objects) * 4 * n
        min_s = ds if min_s is None else min(min_s, ds)
        low_s += ds < 1
        if n == 3:
            star = S.build_s_star(G, 2, strict=False)[0]
            dstar = robustness_delta(star.objects) * 12 * n
            min_star = dstar if min_star is None else min(min_star, dstar)
            low_star += dstar < 1
    ok = low_s == 0 and low_star == 0
    record(8, "robustness of scaled and shrunk squares", ok,
           f"min delta*4n={min_s} min delta*12n={min_star} violations={low_s + low_star}")
    assert ok


def test_disjoint_rectangles_and_unit_squares():
    bad_r = bad_u = 0
    for G in clique_family():
        r = S.build_r_star(G, 2, strict=False)
        bad_r += not pairwise_disjoint(r.objects)
        u, _, _ = S.build_u_star(G, 2, strict=False)
        bad_u += not all(S.unit_square_edges(o) for o in u.objects)
    ok = bad_r == 0 and bad_u == 0
    record(9, "diagonal rectangles disjoint, sheared images unit squares", ok,
           f"overlapping sets={bad_r} non-unit images={bad_u}")
    assert ok


def _ball_cases():
    for G in all_graphs(4):
        yield G, 2
    for s in range(30):
        G = random_graph(random.Random(2000 + s), 5)
        for k in (2, 3):
            yield G, k


def test_ball_reduction():
    start = time.perf_counter()
    class_bad = count_bad = 0
    smallest = constraint_low = math.inf
    worst_tag = None
    cases = 0
    for G, k in _ball_cases():
        cases += 1
        inst = B.build_ball_instance(G, k)
        want = B.independent_sets(G, k)
        got = B.enumerate_stabbing_classes(inst)
        class_bad += got != want or bool(got) != B.has_independent_set(G, k)
        count_bad += len(inst.balls) != 2 * G.n * k + 4 * math.comb(k, 2) * (G.n + 2 * len(G.edges))
        M = np.abs(B.margin_matrix(inst, B.tuple_directions(B.class_tuples(G.n, k), G.n, k)))
        low = float(M.min())
        constraint = [b for b, ball in enumerate(inst.balls) if ball.tag[0] == "constraint"]
        if constraint:
            constraint_low = min(constraint_low, float(M[:, constraint].min()))
        if low < smallest:
            smallest = low
            worst_tag = inst.balls[int(np.unravel_index(M.argmin(), M.shape)[1])].tag[0]
    elapsed = time.perf_counter() - start
    margins_ok = smallest > MARGIN_FLOOR
    ok = class_bad == 0 and count_bad == 0 and margins_ok and elapsed < 120
    record(10, f"ball reduction, {cases} graph/k cases", ok,
           f"class mismatches={class_bad} count mismatches={count_bad} time={elapsed:.1f}s "
           f"min |margin|={smallest:.2e} on a {worst_tag} ball, constraint balls {constraint_low:.2e}, floor {MARGIN_FLOOR:.0e}: "
           f"{'met' if margins_ok else 'NOT met'}")
    assert class_bad == 0 and count_bad == 0 and elapsed < 120
    assert margins_ok, f"smallest |margin| {smallest:.3e} is below {MARGIN_FLOOR}"


def _median_time(count: int, k: int, runs: int = 5) -> float:
    times = []
    for seed in range(runs):
        inst = planted_square_instance(seed, count, k)
        start = time.perf_counter()
        res = stab_fpt(inst)
        times.append(time.perf_counter() - start)
        assert res.yes
    return statistics.median(times)


@pytest.mark.parametrize("k", [2])
def test_doubling_runtime(k):
    sizes = [1000, 2000, 4000]
    medians = [_median_time(n, k) for n in sizes]
    ratios = [b / a for a, b in zip(medians, medians[1:])]
    ok = all(r <= 2.5 for r in ratios)
    shown = " ".join(f"n={n}:{t:.3f}s" for n, t in zip(sizes, medians))
    record(11, f"runtime under doubling n at k={k}", ok,
           f"{shown} ratios={[round(r, 2) for r in ratios]}")
    assert ok
