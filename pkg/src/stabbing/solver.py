"""Bounded-search-tree solver for stabbing c-shallow translates with k D-lines.

Each call reduces groups of objects with identical projections (keeping
``c*k + 1`` per group), looks for a line stabbing between ``c*k + 1`` and
``2*c*k + 1`` objects and branches on the extreme lines of its stab set.
When no such line exists the residual kernel has at most ``c*k**2`` objects
or the answer is NO, and it is solved by branching on the lines through the
object that lies on the fewest candidate lines.

Internally every projection endpoint is replaced by twice its rank among the
distinct endpoint values of its direction, so the search compares small
integers instead of Fractions.  Even ranks are boundary values; odd ranks
sit strictly between two consecutive boundaries (open-object classes).
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import GeometryError, KernelInvariantError
from .geometry import Instance2D, Line, Solution, canonical_lines, stab_set, _closedness


@dataclass(frozen=True)
class SolverConfig:
    """Derived limits for one instance; nothing here is user-tunable."""

    k: int
    c: int
    r: int
    branch_order: str = "direction index, then offset ascending; depth-first"

    @classmethod
    def for_instance(cls, instance: Instance2D) -> SolverConfig:
        return cls(instance.k, instance.c, len(instance.directions))

    @property
    def max_kernel_objects(self) -> int:
        return self.c * self.k * self.k


@dataclass(frozen=True)
class KernelEntry:
    m: int
    k: int
    c: int
    r: int
    min_lines: int | None
    accepted: bool


@dataclass
class SolveStats:
    nodes: int = 0
    max_depth: int = 0
    kernels: list[KernelEntry] = field(default_factory=list)
    branch_widths: list[int] = field(default_factory=list)


@dataclass
class SolveResult:
    witness: Solution | None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def yes(self) -> bool:
        return self.witness is not None

    @property
    def decision(self) -> str:
        return "YES" if self.yes else "NO"


class _Engine:
    """Rank-space view of an instance, shared by every node of one search."""

    def __init__(self, instance: Instance2D):
        self.instance = instance
        self.closed = _closedness(instance.objects)
        self.c = instance.c
        self.r = len(instance.directions)
        self.lo: list[list[int]] = []
        self.hi: list[list[int]] = []
        self.values: list[list[Fraction]] = []
        for d in instance.directions:
            ext = [o.extent(d) for o in instance.objects]
            vals = sorted({v for e in ext for v in e})
            rank = {v: 2 * i for i, v in enumerate(vals)}
            self.values.append(vals)
            self.lo.append([rank[a] for a, _ in ext])
            self.hi.append([rank[b] for _, b in ext])
        self.stats = SolveStats()

    # -- primitives over a subset ``objs`` (tuple of original indices) --

    def hits(self, d: int, t: int, i: int) -> bool:
        if self.closed:
            return self.lo[d][i] <= t <= self.hi[d][i]
        return self.lo[d][i] < t < self.hi[d][i]

    def stabbed(self, objs: Sequence[int], d: int, t: int) -> list[int]:
        return [i for i in objs if self.hits(d, t, i)]

    def boundaries(self, objs: Sequence[int], d: int) -> list[int]:
        lo, hi = self.lo[d], self.hi[d]
        return sorted({lo[i] for i in objs} | {hi[i] for i in objs})

    def lines_with_counts(self, objs: Sequence[int], d: int) -> list[tuple[int, int]]:
        """Canonical lines of direction ``d`` as ``(t, |I(t)|)``, ascending, count >= 1."""
        los = sorted(self.lo[d][i] for i in objs)
        his = sorted(self.hi[d][i] for i in objs)
        bounds = sorted(set(los) | set(his))
        out = []
        if self.closed:
            for t in bounds:
                out.append((t, bisect_right(los, t) - bisect_left(his, t)))
        else:
            for t in (b + 1 for b in bounds[:-1]):
                n = bisect_left(los, t) - bisect_right(his, t)
                if n:
                    out.append((t, n))
        return out

    def offset(self, d: int, t: int) -> Fraction:
        vals = self.values[d]
        if t % 2 == 0:
            return vals[t // 2]
        return (vals[t // 2] + vals[t // 2 + 1]) / 2

    def line(self, d: int, t: int) -> Line:
        return Line(self.instance.directions[d], self.offset(d, t))

    # -- the algorithm --

    def reduce(self, objs: Sequence[int], k: int) -> tuple[int, ...]:
        keep = self.c * k + 1
        cur = list(objs)
        for d in range(self.r):
            seen: dict[tuple[int, int], int] = {}
            nxt = []
            for i in cur:
                key = (self.lo[d][i], self.hi[d][i])
                if seen.get(key, 0) < keep:
                    seen[key] = seen.get(key, 0) + 1
                    nxt.append(i)
            cur = nxt
        return tuple(cur)

    def branch_line(self, objs: Sequence[int], k: int) -> tuple[int, int] | None:
        low, high = self.c * k + 1, 2 * self.c * k + 1
        for d in range(self.r):
            for t, n in self.lines_with_counts(objs, d):
                if low <= n <= high:
                    return d, t
        return None

    def candidates(self, objs: Sequence[int], d: int, t: int) -> list[int]:
        """Extreme lines of direction ``d`` through each member of ``I(t)``."""
        members = self.stabbed(objs, d, t)
        lo, hi = self.lo[d], self.hi[d]
        if self.closed:
            return sorted({lo[i] for i in members} | {hi[i] for i in members})
        # open objects: the class just above the low boundary and just below the high one
        bounds = self.boundaries(objs, d)
        out = set()
        for i in members:
            out.add(lo[i] + 1)
            out.add(bounds[bisect_left(bounds, hi[i]) - 1] + 1)
        return sorted(out)

    def search(self, objs: tuple[int, ...], k: int, depth: int = 0) -> list[tuple[int, int]] | None:
        st = self.stats
        st.nodes += 1
        st.max_depth = max(st.max_depth, depth)
        if not objs:
            return []
        if k == 0:
            return None
        objs = self.reduce(objs, k)
        hit = self.branch_line(objs, k)
        if hit is None:
            return self.kernel(objs, k, depth)
        cands = self.candidates(objs, *hit)
        st.branch_widths.append(len(cands))
        d = hit[0]
        for t in cands:
            rest = tuple(i for i in objs if not self.hits(d, t, i))
            sub = self.search(rest, k - 1, depth + 1)
            if sub is not None:
                return [(d, t)] + sub
        return None

    def kernel(self, objs: tuple[int, ...], k: int, depth: int) -> list[tuple[int, int]] | None:
        m, c, r = len(objs), self.c, self.r
        if m > c * k * k:
            self.stats.kernels.append(KernelEntry(m, k, c, r, None, False))
            return None
        through: dict[int, list[tuple[int, int]]] = {i: [] for i in objs}
        for d in range(r):
            for t, _ in self.lines_with_counts(objs, d):
                for i in self.stabbed(objs, d, t):
                    through[i].append((d, t))
        best = min(objs, key=lambda i: len(through[i]))
        lines = through[best]
        if len(lines) > 2 * r * c * k:
            raise KernelInvariantError(
                f"object {best} lies on {len(lines)} candidate lines, more than 2rck = {2 * r * c * k} "
                f"(m={m}, k={k}, c={c}, r={r}); is c below the true shallowness, or are the objects not translates?"
            )
        found = None
        for d, t in lines:
            rest = tuple(i for i in objs if not self.hits(d, t, i))
            sub = self.search(rest, k - 1, depth + 1)
            if sub is not None:
                found = [(d, t)] + sub
                break
        self.stats.kernels.append(KernelEntry(m, k, c, r, len(lines), found is not None))
        return found


def data_reduce(instance: Instance2D) -> Instance2D:
    """Keep at most ``c*k + 1`` objects per group of identical projections, per direction."""
    eng = _Engine(instance)
    kept = eng.reduce(tuple(range(len(instance.objects))), instance.k)
    return instance.with_objects(instance.objects[i] for i in kept)


def find_branch_line(instance: Instance2D) -> Line | None:
    eng = _Engine(instance)
    hit = eng.branch_line(tuple(range(len(instance.objects))), instance.k)
    return None if hit is None else eng.line(*hit)


def candidate_lines(instance: Instance2D, line: Line) -> list[Line]:
    """Extreme lines parallel to ``line`` through each object it stabs, sorted by offset."""
    instance.direction_index(line.direction)
    members = sorted(stab_set(line, instance))
    if not members:
        raise GeometryError("candidate_lines needs a line that stabs at least one object")
    if _closedness(instance.objects):
        offs = {v for i in members for v in instance.objects[i].extent(line.direction)}
        return [Line(line.direction, v) for v in sorted(offs)]
    classes = canonical_lines(instance.objects, line.direction)
    out = set()
    for i in members:
        lo, hi = instance.objects[i].extent(line.direction)
        inside = [l.offset for l in classes if lo < l.offset < hi]
        out.update((min(inside), max(inside)))
    return [Line(line.direction, v) for v in sorted(out)]


def _finish(eng: _Engine, found, instance: Instance2D) -> SolveResult:
    if found is None:
        return SolveResult(None, eng.stats)
    sol = Solution(tuple(eng.line(d, t) for d, t in found))
    covered = set()
    for l in sol.lines:
        covered |= stab_set(l, instance)
    if len(sol) > instance.k or len(covered) != len(instance.objects):
        raise AssertionError("internal error: solver produced a witness that does not cover the instance")
    return SolveResult(sol, eng.stats)


def stab_fpt(instance: Instance2D) -> SolveResult:
    """Decide whether ``instance.k`` lines from the direction set stab every object.

    ``instance.c`` must bound the true shallowness (see check_shallowness) and
    the objects should be translates of one convex object; otherwise the
    outcome is unspecified and the kernel invariant may raise.
    """
    eng = _Engine(instance)
    found = eng.search(tuple(range(len(instance.objects))), instance.k)
    return _finish(eng, found, instance)


def solve_kernel(instance: Instance2D) -> SolveResult:
    """Solve an instance on which no line stabs more than ``c*k`` objects."""
    eng = _Engine(instance)
    objs = tuple(range(len(instance.objects)))
    if not objs:
        eng.stats.kernels.append(KernelEntry(0, instance.k, instance.c, eng.r, 0, True))
        return _finish(eng, [], instance)
    if instance.k == 0:
        return _finish(eng, None, instance)
    return _finish(eng, eng.kernel(objs, instance.k, 0), instance)


def check_shallowness(instance: Instance2D) -> int:
    """Largest ``|I(l) & I(l')|`` over canonical lines of different directions, at least 1."""
    if len(instance.directions) < 2:
        raise GeometryError("shallowness undefined for r=1")
    eng = _Engine(instance)
    objs = range(len(instance.objects))
    masks = []
    for d in range(eng.r):
        row = []
        for t, _ in eng.lines_with_counts(objs, d):
            mask = 0
            for i in eng.stabbed(objs, d, t):
                mask |= 1 << i
            row.append(mask)
        masks.append(row)
    best = 1
    for d1 in range(eng.r):
        for d2 in range(d1 + 1, eng.r):
            for a in masks[d1]:
                for b in masks[d2]:
                    n = (a & b).bit_count()
                    if n > best:
                        best = n
    return best
