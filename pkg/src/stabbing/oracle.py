"""Exhaustive ground truth: try every small subset of canonical lines."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import GuardExceededError
from .geometry import Instance2D, Line, Solution, canonical_lines, stabs
from .solver import SolveResult, SolveStats

ORACLE_LIMIT = 10**8


@dataclass(frozen=True)
class DominanceReport:
    kept: tuple[Line, ...]
    removed: tuple[tuple[Line, Line | None], ...]


def _mask(line: Line, instance: Instance2D) -> int:
    m = 0
    for i, o in enumerate(instance.objects):
        if stabs(line, o):
            m |= 1 << i
    return m


def _all_lines(instance: Instance2D) -> list[tuple[Line, int]]:
    out = []
    for d in instance.directions:
        for line in canonical_lines(instance.objects, d):
            out.append((line, _mask(line, instance)))
    return out


def _filter(lines: list[tuple[Line, int]]) -> tuple[list[tuple[Line, int]], list[tuple[Line, Line | None]]]:
    # larger stab sets first; the canonical (direction, offset) order breaks ties
    order = sorted(range(len(lines)), key=lambda i: -lines[i][1].bit_count())
    kept: list[int] = []
    removed = []
    for i in order:
        line, m = lines[i]
        if m == 0:
            removed.append((line, None))
            continue
        dom = next((j for j in kept if m | lines[j][1] == lines[j][1]), None)
        if dom is None:
            kept.append(i)
        else:
            removed.append((line, lines[dom][0]))
    kept.sort()
    return [lines[i] for i in kept], removed


def dominance_filter(instance: Instance2D) -> DominanceReport:
    """Drop canonical lines whose stab set is contained in a kept line's stab set."""
    kept, removed = _filter(_all_lines(instance))
    return DominanceReport(tuple(l for l, _ in kept), tuple(removed))


def brute_force_stab(instance: Instance2D, limit: int = ORACLE_LIMIT) -> SolveResult:
    """Decide the instance by enumerating subsets of the dominance-filtered lines.

    Raises GuardExceededError when more than ``limit`` subsets would be tried.
    """
    if not instance.objects:
        return SolveResult(Solution(()), SolveStats(nodes=1))
    kept, _ = _filter(_all_lines(instance))
    size = min(instance.k, len(kept))
    if comb(len(kept), size) > limit:
        raise GuardExceededError(
            f"instance too large for oracle: C({len(kept)}, {size}) subsets exceeds {limit}"
        )
    full = (1 << len(instance.objects)) - 1
    masks = [m for _, m in kept]
    tried = 0
    for combo in combinations(range(len(kept)), size):
        tried += 1
        cover = 0
        for j in combo:
            cover |= masks[j]
        if cover == full:
            return SolveResult(Solution(tuple(kept[j][0] for j in combo)), SolveStats(nodes=tried))
    return SolveResult(None, SolveStats(nodes=tried))


def verify_solution(instance: Instance2D, solution: Solution) -> bool:
    if len(solution.lines) > instance.k:
        return False
    if any(l.direction not in instance.directions for l in solution.lines):
        return False
    return all(any(stabs(l, o) for l in solution.lines) for o in instance.objects)
