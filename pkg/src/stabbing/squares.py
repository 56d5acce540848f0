"""Clique-to-stabbing constructions with axis-parallel squares.

A directed graph ``G`` on ``[n]`` and a clique size ``k`` produce a set of
open squares that ``6k`` axis-parallel lines can stab exactly when ``G`` has
a ``k``-clique.  Variants:

``s-prime``  two square sizes (``n`` for forcing gadgets, ``n-1`` otherwise)
``s``        all squares of side ``n-1``
``s-star``   scaled by ``1/n``, ``n**2`` squares per forcing gadget, every square shrunk
``r-star``   wobbled copies of ``s-star`` with each square replaced by a thin diagonal rectangle
``u-star``   ``r-star`` mapped by a shear so every rectangle becomes a unit square
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import GeometryError, LayoutMismatchError
from .geometry import (
    AXIS_DIRECTIONS,
    HORIZONTAL,
    VERTICAL,
    ConvexObject,
    Direction,
    Instance2D,
    Line,
    LinearMap2,
    Point,
    Solution,
    apply_map,
    canonical_lines,
    polygon,
    square,
    stabs,
)

GADGET_KINDS = ("F_h", "F_v", "A", "D", "C_h", "C_v")
VARIANTS = ("s-prime", "s", "s-star", "r-star", "u-star")

# (x, y, side) of an axis-parallel square, lower left corner first
Raw = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        if self.n < 2:
            raise ValueError("a digraph needs n >= 2 vertices")
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop ({i}, {j}) not allowed")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i}, {j}) outside [1, {self.n}]")

    @classmethod
    def complete(cls, n: int) -> Digraph:
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j))

    @classmethod
    def empty(cls, n: int) -> Digraph:
        return cls(n, frozenset())


@dataclass(frozen=True)
class GadgetSpec:
    kind: str
    offset: Point
    squares: tuple[ConvexObject, ...]
    keys: tuple = ()


@dataclass(frozen=True)
class StripLayout:
    horizontal_strips: tuple[tuple[Fraction, Fraction], ...]
    vertical_strips: tuple[tuple[Fraction, Fraction], ...]
    classes_per_strip: int


def expected_square_count(kind: str, n: int, k: int, num_edges: int, forcing: int | None = None) -> int:
    """Square count of one gadget; ``forcing`` overrides the 6k+1 forcing-gadget size."""
    if kind in ("F_h", "F_v"):
        return 6 * k + 1 if forcing is None else forcing
    if kind == "A":
        return n * n - num_edges
    if kind == "D":
        return n * n - n
    if kind in ("C_h", "C_v"):
        return 2 * n - 2
    raise ValueError(f"unknown gadget kind {kind!r}")


def has_clique(G: Digraph, k: int) -> bool:
    """Exhaustive: some k vertices with arcs in both directions between every pair."""
    if not 1 <= k <= G.n:
        raise ValueError("need 1 <= k <= n")
    for C in combinations(range(1, G.n + 1), k):
        if all((i, j) in G.edges and (j, i) in G.edges for i, j in combinations(C, 2)):
            return True
    return False


# ---------------------------------------------------------------------------
# gadgets in raw (x, y, side) form, absolute coordinates


def _f_h(ox, oy, count, n, unit) -> list[Raw]:
    inset = Fraction(1, 2) if unit else Fraction(0)
    side = n - 1 if unit else n
    return [(ox - a * n + inset, oy + inset, Fraction(side)) for a in range(1, count + 1)]


def _f_v(ox, oy, count, n, unit) -> list[Raw]:
    return [(y, x, s) for x, y, s in _f_h(oy, ox, count, n, unit)]


def _a(ox, oy, n, edges) -> tuple[list[Raw], list]:
    keys = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if (i, j) not in edges]
    return [(Fraction(ox + i), Fraction(oy + j), Fraction(n - 1)) for i, j in keys], keys


def _c_h(ox, oy, n) -> list[Raw]:
    lower = [(ox + a, oy + a - n + 1) for a in range(1, n)]
    upper = [(ox + a - n, oy + n + a - 1) for a in range(2, n + 1)]
    return [(Fraction(x), Fraction(y), Fraction(n - 1)) for x, y in lower + upper]


def _c_v(ox, oy, n) -> list[Raw]:
    lower = [(ox + a - n + 1, oy + a) for a in range(1, n)]
    upper = [(ox + n + a - 1, oy + a - n) for a in range(2, n + 1)]
    return [(Fraction(x), Fraction(y), Fraction(n - 1)) for x, y in lower + upper]


@dataclass
class _RawGadget:
    kind: str
    offset: tuple[Fraction, Fraction]
    squares: list[Raw]
    keys: list


def _base_gadgets(G: Digraph, k: int, unit: bool) -> list[_RawGadget]:
    n = G.n
    m = 3 * n
    far = -m * (k + 1)
    out: list[_RawGadget] = []
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i != j:
                sq, keys = _a(m * i, m * j, n, G.edges)
                out.append(_RawGadget("A", (m * i, m * j), sq, keys))
    for i in range(1, k + 1):
        # squares exactly at the off-diagonal pairs
        keys = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
        sq = [(Fraction(m * i + a), Fraction(m * i + b), Fraction(n - 1)) for a, b in keys]
        out.append(_RawGadget("D", (m * i, m * i), sq, keys))
    for i in range(1, k + 1):
        out.append(_RawGadget("C_h", (-m * i, m * i), _c_h(-m * i, m * i, n), list(range(1, 2 * n - 1))))
    for i in range(1, k + 1):
        out.append(_RawGadget("C_v", (m * i, -m * i), _c_v(m * i, -m * i, n), list(range(1, 2 * n - 1))))
    count = 6 * k + 1
    for i in range(1, k + 1):
        for ox, oy in ((far, m * i), (far, m * i + n)):
            out.append(_RawGadget("F_h", (ox, oy), _f_h(ox, oy, count, n, unit), list(range(1, count + 1))))
        for ox, oy in ((m * i, far), (m * i + n, far)):
            out.append(_RawGadget("F_v", (ox, oy), _f_v(ox, oy, count, n, unit), list(range(1, count + 1))))
    for i in range(1, k + 1):
        ox, oy = -m * i, far
        out.append(_RawGadget("F_v", (ox, oy), _f_v(ox, oy, count, n, unit), list(range(1, count + 1))))
    for i in range(1, k + 1):
        ox, oy = far, -m * i
        out.append(_RawGadget("F_h", (ox, oy), _f_h(ox, oy, count, n, unit), list(range(1, count + 1))))
    return out


def _check_params(G: Digraph, k: int, strict: bool) -> None:
    if not 2 <= k <= G.n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={G.n}")
    if strict and G.n < 6 * k + 4:
        raise ValueError(
            f"n={G.n} is below 6k+4={6 * k + 4}; pass strict=False to build small instances anyway"
        )


def _star_gadgets(G: Digraph, k: int) -> list[_RawGadget]:
    n = G.n
    s = Fraction(1, n)
    eps = s / 6
    u = 1 - s
    big = n * n
    out = []
    for g in _base_gadgets(G, k, unit=True):
        ox, oy = Fraction(g.offset[0]) * s, Fraction(g.offset[1]) * s
        if g.kind == "F_h":
            sq = [(ox - a + s / 2, oy + s / 2, u) for a in range(1, big + 1)]
            keys = list(range(1, big + 1))
        elif g.kind == "F_v":
            sq = [(ox + s / 2, oy - a + s / 2, u) for a in range(1, big + 1)]
            keys = list(range(1, big + 1))
        else:
            sq = [(x * s, y * s, side * s) for x, y, side in g.squares]
            keys = g.keys
        sq = [(x + eps, y + eps, side - 2 * eps) for x, y, side in sq]
        out.append(_RawGadget(g.kind, (ox, oy), sq, keys))
    return out


def wobble_width(n: int) -> Fraction:
    """Width parameter ``W = n**-4`` of the thin rectangles."""
    return Fraction(1, n**4)


def star_side(n: int) -> Fraction:
    """Side ``1 - 1/n - 2/(6n)`` of every square in the shrunk construction."""
    return 1 - Fraction(1, n) - Fraction(2, 6 * n)


def wobbled_side(n: int) -> Fraction:
    W = wobble_width(n)
    return star_side(n) - 2 * W * n * n


def _wobbled_gadgets(G: Digraph, k: int) -> list[_RawGadget]:
    n = G.n
    W = wobble_width(n)
    uw = wobbled_side(n)
    lift = W * n * n
    out = []
    for g in _star_gadgets(G, k):
        sq = []
        for (x, y, _), key in zip(g.squares, g.keys):
            if g.kind in ("A", "D"):
                i, j = key
                phi = i * n + j
            elif g.kind in ("C_h", "C_v"):
                phi = key
            else:
                phi = 0
            sq.append((x + lift, y + lift + 2 * W * phi, uw))
        out.append(_RawGadget(g.kind, g.offset, sq, g.keys))
    return out


def rho(x, y, W: Fraction, side: Fraction, closed: bool = False) -> ConvexObject:
    """Thin rectangle along the main diagonal of the square ``(x, y, side)``."""
    return polygon(
        [(x + W, y), (x + side, y + side - W), (x + side - W, y + side), (x, y + W)],
        closed,
    )


def _objects(gadgets: Sequence[_RawGadget], closed: bool = False) -> list[ConvexObject]:
    return [square(x, y, s, closed) for g in gadgets for x, y, s in g.squares]


def _specs(gadgets: Sequence[_RawGadget], make) -> tuple[GadgetSpec, ...]:
    return tuple(
        GadgetSpec(g.kind, (Fraction(g.offset[0]), Fraction(g.offset[1])), tuple(make(*t) for t in g.squares), tuple(g.keys))
        for g in gadgets
    )


def _layout(gadgets: Sequence[_RawGadget], n: int) -> StripLayout:
    hs, vs = [], []
    for g in gadgets:
        x, y, side = g.squares[0]
        if g.kind == "F_h":
            hs.append((y, y + side))
        elif g.kind == "F_v":
            vs.append((x, x + side))
    return StripLayout(tuple(sorted(hs)), tuple(sorted(vs)), n)


def _instance(objects: Iterable[ConvexObject], k: int) -> Instance2D:
    objs = tuple(objects)
    # c is a safe upper bound only; check_shallowness measures the real value
    return Instance2D(objs, AXIS_DIRECTIONS, 6 * k, max(1, len(objs)))


def gadgets(G: Digraph, k: int, variant: str = "s-prime", strict: bool = True) -> tuple[GadgetSpec, ...]:
    """The gadget decomposition of a construction, squares as ConvexObjects."""
    if variant in ("s-prime", "s"):
        _check_params(G, k, strict=False)
        return _specs(_base_gadgets(G, k, unit=(variant == "s")), lambda x, y, s: square(x, y, s, False))
    _check_params(G, k, strict)
    if variant == "s-star":
        return _specs(_star_gadgets(G, k), lambda x, y, s: square(x, y, s, False))
    if variant in ("r-star", "u-star"):
        W, uw = wobble_width(G.n), wobbled_side(G.n)
        specs = _specs(_wobbled_gadgets(G, k), lambda x, y, s: rho(x, y, W, uw))
        if variant == "r-star":
            return specs
        M = shear_map(G.n)
        return tuple(GadgetSpec(g.kind, M.apply_point(g.offset), tuple(M.apply_object(o) for o in g.squares), g.keys) for g in specs)
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def build_s_prime(G: Digraph, k: int) -> tuple[Instance2D, StripLayout]:
    _check_params(G, k, strict=False)
    gs = _base_gadgets(G, k, unit=False)
    return _instance(_objects(gs), k), _layout(gs, G.n)


def build_s(G: Digraph, k: int) -> tuple[Instance2D, StripLayout]:
    _check_params(G, k, strict=False)
    gs = _base_gadgets(G, k, unit=True)
    return _instance(_objects(gs), k), _layout(gs, G.n)


def build_s_star(G: Digraph, k: int, strict: bool = True) -> tuple[Instance2D, StripLayout]:
    _check_params(G, k, strict)
    gs = _star_gadgets(G, k)
    return _instance(_objects(gs), k), _layout(gs, G.n)


def build_r_star(G: Digraph, k: int, strict: bool = True) -> Instance2D:
    _check_params(G, k, strict)
    W, uw = wobble_width(G.n), wobbled_side(G.n)
    gs = _wobbled_gadgets(G, k)
    return _instance((rho(x, y, W, uw) for g in gs for x, y, _ in g.squares), k)


def shear_map(n: int) -> LinearMap2:
    """Linear map sending every wobbled diagonal rectangle onto an axis-parallel unit square."""
    W, uw = wobble_width(n), wobbled_side(n)
    h = Fraction(1, 2)
    return LinearMap2(h / W, -h / W, h / (uw - W), h / (uw - W))


def build_u_star(G: Digraph, k: int, strict: bool = True) -> tuple[Instance2D, Direction, Direction]:
    M = shear_map(G.n)
    image = apply_map(M, build_r_star(G, k, strict))
    return image, M.apply_direction(HORIZONTAL), M.apply_direction(VERTICAL)


def diagonal_gaps_ok(rects: Sequence[ConvexObject], W: Fraction) -> bool:
    """Every pair of diagonal rectangles with overlapping bounding boxes has diagonals at
    distance at least ``sqrt(2) * W`` (compared through squared distances)."""
    info = []
    for r in rects:
        x0, x1 = r.extent(VERTICAL)
        y0, y1 = r.extent(HORIZONTAL)
        info.append((x0, x1, y0, y1, x0 - y0))
    info.sort()
    for a in range(len(info)):
        x0, x1, y0, y1, d = info[a]
        for b in range(a + 1, len(info)):
            u0, u1, v0, v1, e = info[b]
            if u0 >= x1:
                break
            if v0 < y1 and y0 < v1 and (d - e) ** 2 / 2 < 2 * W * W:
                return False
    return True


def unit_square_edges(obj: ConvexObject) -> bool:
    """True iff every edge vector of ``obj`` is one of (+-1, 0), (0, +-1)."""
    allowed = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    return len(obj.vertices) == 4 and all(e in allowed for e in obj.edges())


# ---------------------------------------------------------------------------
# quasi squares


def quasi_square_map(obj: ConvexObject, d: Direction, d2: Direction) -> LinearMap2:
    """Map with ``d`` -> horizontal, ``d2`` -> vertical and a unit bounding box for ``obj``.

    Writing a point as ``a*d + b*d2``, the map sends it to ``(a/la, b/lb)``
    where ``la`` and ``lb`` are the ranges of ``a`` and ``b`` over the object.
    """
    det = d.vector[0] * d2.vector[1] - d2.vector[0] * d.vector[1]
    if det == 0:
        raise GeometryError("quasi_square_map needs two independent directions")
    B = LinearMap2(d.vector[0], d2.vector[0], d.vector[1], d2.vector[1]).inverse()
    coords = [B.apply_point(v) for v in obj.vertices]
    la = max(a for a, _ in coords) - min(a for a, _ in coords)
    lb = max(b for _, b in coords) - min(b for _, b in coords)
    return LinearMap2.scaling(1 / la, 1 / lb) @ B


# ---------------------------------------------------------------------------
# strip verifier


def _csp(domains: list[int], clauses: list[list[tuple[int, int]]]) -> list[int] | None:
    """Pick one value per variable so that every clause has a literal (var, mask) with
    the chosen value in mask.  Unit propagation plus smallest-domain branching."""
    by_var: list[list[int]] = [[] for _ in domains]
    for ci, cl in enumerate(clauses):
        for v, _ in cl:
            by_var[v].append(ci)

    def propagate(dom: list[int]) -> bool:
        queue = list(range(len(clauses)))
        queued = set(queue)
        while queue:
            ci = queue.pop()
            queued.discard(ci)
            live = []
            done = False
            for v, m in clauses[ci]:
                if dom[v] & ~m == 0:
                    done = True
                    break
                if dom[v] & m:
                    live.append((v, m))
            if done:
                continue
            if not live:
                return False
            if len(live) == 1:
                v, m = live[0]
                dom[v] &= m
                for cj in by_var[v]:
                    if cj not in queued:
                        queued.add(cj)
                        queue.append(cj)
        return True

    def search(dom: list[int]) -> list[int] | None:
        if not propagate(dom):
            return None
        open_vars = [v for v, m in enumerate(dom) if m & (m - 1)]
        if not open_vars:
            return [m.bit_length() - 1 for m in dom]
        v = min(open_vars, key=lambda u: (dom[u].bit_count(), u))
        m = dom[v]
        while m:
            bit = m & -m
            m ^= bit
            sub = list(dom)
            sub[v] = bit
            got = search(sub)
            if got is not None:
                return got
        return None

    return search(list(domains))


def _apart(a, b, lo, hi, closed) -> bool:
    return (b < lo or a > hi) if closed else (b <= lo or a >= hi)


def _escape_count(objects, direction, other, strip, cross_strips, closed) -> int:
    """Largest family of objects inside ``strip`` that are pairwise disjoint along ``other``
    and that no line of any crossing strip can reach.  If ``strip`` gets no line, each
    member of the family needs its own crossing line lying outside every strip."""
    lo, hi = strip
    inside = []
    for o in objects:
        a, b = o.extent(direction)
        if lo <= a and b <= hi:
            e = o.extent(other)
            if all(_apart(e[0], e[1], c0, c1, closed) for c0, c1 in cross_strips):
                inside.append(e)
    inside.sort(key=lambda e: e[1])
    count, last = 0, None
    for a, b in inside:
        if last is None or (a > last if closed else a >= last):
            count += 1
            last = b
    return count


def _check_forcing(objects, layout: StripLayout, closed: bool) -> None:
    """Raise unless every solution with one line per strip budget must put a line in every strip.

    With ``t_h`` empty horizontal and ``t_v`` empty vertical strips, the occupied
    strips use at least ``S - t_h - t_v`` lines and the empty ones need at least
    ``e_h`` (resp. ``e_v``) lines outside all strips, where ``e`` is the smallest
    escape count of that orientation.  Both ``e_h > #horizontal``, ``e_v > #vertical``
    and ``e_h + e_v > S`` rule out every nonzero ``(t_h, t_v)``.
    """
    hs, vs = layout.horizontal_strips, layout.vertical_strips
    e_h = min((_escape_count(objects, HORIZONTAL, VERTICAL, s, vs, closed) for s in hs), default=0)
    e_v = min((_escape_count(objects, VERTICAL, HORIZONTAL, s, hs, closed) for s in vs), default=0)
    total = len(hs) + len(vs)
    if (hs and e_h <= len(hs)) or (vs and e_v <= len(vs)) or (hs and vs and e_h + e_v <= total):
        raise LayoutMismatchError(
            f"strips are not forced: escape counts {e_h} (horizontal, {len(hs)} strips) "
            f"and {e_v} (vertical, {len(vs)} strips)"
        )


def strip_solve(instance: Instance2D, layout: StripLayout) -> Solution | None:
    """Exact decision (with witness) for stabbing ``instance`` by ``instance.k`` axis-parallel
    lines, given strips that each force one line.

    Because every strip is pierced by a disjoint family larger than the
    budget, and there are exactly as many strips as lines, a solution takes one
    line class from each strip and nothing else.
    """
    objs = instance.objects
    if set(instance.directions) != set(AXIS_DIRECTIONS):
        raise LayoutMismatchError("strip verification needs exactly the two axis directions")
    strips = [(HORIZONTAL, VERTICAL, lo, hi) for lo, hi in layout.horizontal_strips]
    strips += [(VERTICAL, HORIZONTAL, lo, hi) for lo, hi in layout.vertical_strips]
    if len(strips) != instance.k:
        raise LayoutMismatchError(f"{len(strips)} strips but budget {instance.k}")
    if not objs:
        return Solution(())
    closed = objs[0].closed
    for group in (layout.horizontal_strips, layout.vertical_strips):
        ivs = sorted(group)
        for (a0, a1), (b0, b1) in zip(ivs, ivs[1:]):
            if (b0 <= a1) if closed else (b0 < a1):
                raise LayoutMismatchError("strips of one direction overlap")
    classes: list[list[tuple[Line, int]]] = []
    by_dir = {d: canonical_lines(objs, d) for d in AXIS_DIRECTIONS}
    _check_forcing(objs, layout, closed)
    for direction, other, lo, hi in strips:
        found = []
        for line in by_dir[direction]:
            inside = lo <= line.offset <= hi if closed else lo < line.offset < hi
            if inside:
                mask = 0
                for i, o in enumerate(objs):
                    if stabs(line, o):
                        mask |= 1 << i
                found.append((line, mask))
        # within a strip a line whose stab set is contained in another's is never needed
        found.sort(key=lambda lm: -lm[1].bit_count())
        kept: list[tuple[Line, int]] = []
        for line, m in found:
            if not any(m | km == km for _, km in kept):
                kept.append((line, m))
        kept.sort(key=lambda lm: lm[0].offset)
        if not kept:
            return None
        classes.append(kept)
    clauses = set()
    for i in range(len(objs)):
        bit = 1 << i
        clause = []
        trivial = False
        for s, kept in enumerate(classes):
            m = 0
            for ci, (_, mask) in enumerate(kept):
                if mask & bit:
                    m |= 1 << ci
            if m == (1 << len(kept)) - 1:
                trivial = True
                break
            if m:
                clause.append((s, m))
        if trivial:
            continue
        if not clause:
            return None
        clauses.add(tuple(clause))
    domains = [(1 << len(kept)) - 1 for kept in classes]
    choice = _csp(domains, [list(c) for c in sorted(clauses)])
    if choice is None:
        return None
    return Solution(tuple(classes[s][v][0] for s, v in enumerate(choice)))


def strip_verify(instance: Instance2D, layout: StripLayout) -> bool:
    return strip_solve(instance, layout) is not None


# ---------------------------------------------------------------------------
# gadget lemmas, checked on the gadgets in isolation (offset 0)


def _gadget_squares(kind: str, n: int) -> list[ConvexObject]:
    if kind == "C_h":
        sq = _c_h(0, 0, n)
    elif kind == "C_v":
        sq = _c_v(0, 0, n)
    else:
        raise ValueError(kind)
    return [square(x, y, s, closed=False) for x, y, s in sq]


def _vertex_line(direction: Direction, vertex: int, positive: bool, n: int) -> Line:
    # midpoint of the open vertex strip (vertex - 1, vertex), shifted by n for the positive half
    return Line(direction, Fraction(2 * vertex - 1, 2) + (n if positive else 0))


def antipodal_lines(n: int, v_neg: int, v_pos: int, h_neg: int, h_pos: int) -> list[Line]:
    return [
        _vertex_line(VERTICAL, v_neg, False, n),
        _vertex_line(VERTICAL, v_pos, True, n),
        _vertex_line(HORIZONTAL, h_neg, False, n),
        _vertex_line(HORIZONTAL, h_pos, True, n),
    ]


def grid_misses(n: int) -> dict[tuple[int, int, int, int], int]:
    """For each antipodal choice ``(i1, i2, j1, j2)``, the bitmask of grid positions
    ``(a, b)`` whose side ``n-1`` square none of the four lines stabs."""
    # the adjacency gadget of the empty digraph has a square at every position
    raw, _ = _a(0, 0, n, frozenset())
    sq = [square(x, y, side, closed=False) for x, y, side in raw]
    r = range(1, n + 1)
    out = {}
    for choice in product(r, r, r, r):
        lines = antipodal_lines(n, *choice)
        out[choice] = sum(1 << c for c, o in enumerate(sq) if not any(stabs(l, o) for l in lines))
    return out


def _pair_check(n: int, present: Sequence[tuple[int, int]], misses=None) -> bool:
    """For every choice of antipodal vertical pair ``(i1, i2)`` and horizontal pair
    ``(j1, j2)``, the four lines stab every square at ``present`` positions exactly
    when none of them has ``i1 <= a <= i2`` and ``j1 <= b <= j2``.  Consistent pairs
    (``i1 == i2``, ``j1 == j2``) give the usual lemma statement."""
    misses = grid_misses(n) if misses is None else misses
    mask = sum(1 << ((a - 1) * n + b - 1) for a, b in present)
    for (i1, i2, j1, j2), miss in misses.items():
        want = not any(i1 <= a <= i2 and j1 <= b <= j2 for a, b in present)
        if (miss & mask == 0) != want:
            return False
    return True


def adjacency_lemma_holds(G: Digraph, misses=None) -> bool:
    """Antipodal vertical pair for ``i`` and horizontal pair for ``j`` stab all of ``A(G)``
    exactly when ``(i, j)`` is an arc (checked over all antipodal pair choices).

    ``misses`` may carry a precomputed ``grid_misses(G.n)`` when many graphs are checked.
    """
    n = G.n
    present = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if (a, b) not in G.edges]
    return _pair_check(n, present, misses)


def diagonal_lemma_holds(n: int) -> bool:
    present = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    return _pair_check(n, present)


def _common_point(intervals: Sequence[tuple[Fraction, Fraction]]) -> bool:
    if not intervals:
        return True
    return max(a for a, _ in intervals) < min(b for _, b in intervals)


def consistency_lemma_holds(n: int) -> bool:
    """For both C gadgets: given antipodal lines representing ``a`` (negative) and ``b``
    (positive), one orthogonal line finishes the gadget exactly when ``b >= a``."""
    for kind, par, orth in (("C_h", HORIZONTAL, VERTICAL), ("C_v", VERTICAL, HORIZONTAL)):
        sq = _gadget_squares(kind, n)
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                lines = [_vertex_line(par, a, False, n), _vertex_line(par, b, True, n)]
                left = [o.extent(orth) for o in sq if not any(stabs(l, o) for l in lines)]
                if _common_point(left) != (b >= a):
                    return False
    return True
