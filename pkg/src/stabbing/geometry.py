"""Exact rational plane geometry for line stabbing.

Every coordinate is a :class:`fractions.Fraction`.  A line is stored as
``{p : normal . p = offset}`` where ``normal`` is the canonical normal of its
direction, so horizontal lines carry their ``y`` value as offset and vertical
lines their ``x`` value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GeometryError

Point = tuple[Fraction, Fraction]


def rational(value) -> Fraction:
    """Coerce ints, strings such as ``"3/4"`` and Fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates; pass a Fraction or 'p/q' string")
    return Fraction(value)


def _point(p) -> Point:
    return (rational(p[0]), rational(p[1]))


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _canonical_normal(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Scale ``(a, b)`` so its first nonzero entry is 1; also return the factor used."""
    if a != 0:
        f = 1 / a
    elif b != 0:
        f = 1 / b
    else:
        raise GeometryError("direction vector must be nonzero")
    return a * f, b * f, f


@dataclass(frozen=True)
class Direction:
    """A line direction, compared by its canonical normal.

    ``vector`` keeps the representative the caller supplied (useful for
    serialization); it does not take part in equality or hashing.
    """

    normal: tuple[Fraction, Fraction]
    vector: tuple[Fraction, Fraction] = field(compare=False, hash=False)

    @classmethod
    def from_vector(cls, dx, dy) -> Direction:
        dx, dy = rational(dx), rational(dy)
        a, b, _ = _canonical_normal(-dy, dx)
        return cls((a, b), (dx, dy))

    @classmethod
    def from_normal(cls, a, b) -> Direction:
        a, b, _ = _canonical_normal(rational(a), rational(b))
        return cls((a, b), (b, -a))

    def project(self, p: Point) -> Fraction:
        return self.normal[0] * p[0] + self.normal[1] * p[1]

    def __repr__(self) -> str:
        return f"Direction({self.vector[0]}, {self.vector[1]})"


HORIZONTAL = Direction.from_vector(1, 0)
VERTICAL = Direction.from_vector(0, 1)
AXIS_DIRECTIONS = (HORIZONTAL, VERTICAL)


@dataclass(frozen=True)
class Line:
    direction: Direction
    offset: Fraction

    @classmethod
    def horizontal(cls, y) -> Line:
        return cls(HORIZONTAL, rational(y))

    @classmethod
    def vertical(cls, x) -> Line:
        return cls(VERTICAL, rational(x))

    def __repr__(self) -> str:
        if self.direction == HORIZONTAL:
            return f"Line(y={self.offset})"
        if self.direction == VERTICAL:
            return f"Line(x={self.offset})"
        a, b = self.direction.normal
        return f"Line({a}*x + {b}*y = {self.offset})"


@dataclass(frozen=True)
class ConvexObject:
    """A strictly convex polygon, vertices counterclockwise.

    Clockwise input is reversed; degenerate input (fewer than three vertices,
    repeated or collinear vertices, non-convex rings) raises GeometryError.
    """

    vertices: tuple[Point, ...]
    closed: bool = True
    _extents: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        pts = tuple(_point(p) for p in self.vertices)
        if len(pts) < 3:
            raise GeometryError(f"degenerate object with {len(pts)} vertices")
        area2 = sum(pts[i - 1][0] * pts[i][1] - pts[i][0] * pts[i - 1][1] for i in range(len(pts)))
        if area2 == 0:
            raise GeometryError("degenerate object with zero area")
        if area2 < 0:
            pts = tuple(reversed(pts))
        m = len(pts)
        for i in range(m):
            a, b = pts[i], pts[(i + 1) % m]
            for j in range(m):
                if j in (i, (i + 1) % m):
                    continue
                if _cross(a, b, pts[j]) <= 0:
                    raise GeometryError("vertices are not in strictly convex position")
        object.__setattr__(self, "vertices", pts)

    def extent(self, direction: Direction) -> tuple[Fraction, Fraction]:
        """``(min, max)`` of ``normal . v`` over the vertices."""
        key = direction.normal
        got = self._extents.get(key)
        if got is None:
            a, b = key
            vals = [a * x + b * y for x, y in self.vertices]
            got = (min(vals), max(vals))
            self._extents[key] = got
        return got

    def translate(self, dx, dy) -> ConvexObject:
        dx, dy = rational(dx), rational(dy)
        return ConvexObject(tuple((x + dx, y + dy) for x, y in self.vertices), self.closed)

    def bounding_box(self) -> ConvexObject:
        x0, x1 = self.extent(VERTICAL)
        y0, y1 = self.extent(HORIZONTAL)
        return rectangle(x0, y0, x1 - x0, y1 - y0, closed=self.closed)

    def edges(self) -> list[tuple[Fraction, Fraction]]:
        v = self.vertices
        return [(v[(i + 1) % len(v)][0] - v[i][0], v[(i + 1) % len(v)][1] - v[i][1]) for i in range(len(v))]


def polygon(points: Iterable, closed: bool = True) -> ConvexObject:
    return ConvexObject(tuple(points), closed)


def rectangle(x, y, width, height, closed: bool = True) -> ConvexObject:
    x, y, w, h = map(rational, (x, y, width, height))
    return ConvexObject(((x, y), (x + w, y), (x + w, y + h), (x, y + h)), closed)


def square(x, y, side, closed: bool = True) -> ConvexObject:
    """Axis-parallel square with lower left corner ``(x, y)``."""
    return rectangle(x, y, side, side, closed)


def convex_hull(points: Iterable) -> list[Point]:
    """Strict convex hull, counterclockwise (monotone chain, collinear points dropped)."""
    pts = sorted(set(_point(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class Instance2D:
    objects: tuple[ConvexObject, ...]
    directions: tuple[Direction, ...]
    k: int
    c: int = 1

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "directions", tuple(self.directions))
        if not self.directions:
            raise GeometryError("direction set must be nonempty")
        if len(set(self.directions)) != len(self.directions):
            raise GeometryError("duplicate directions")
        if self.k < 0:
            raise GeometryError("budget k must be non-negative")
        if self.c < 1:
            raise GeometryError("shallowness bound c must be positive")

    def direction_index(self, direction: Direction) -> int:
        try:
            return self.directions.index(direction)
        except ValueError:
            raise GeometryError(f"{direction!r} is not in the instance's direction set") from None

    def with_objects(self, objects: Iterable[ConvexObject]) -> Instance2D:
        return Instance2D(tuple(objects), self.directions, self.k, self.c)

    def with_budget(self, k: int | None = None, c: int | None = None) -> Instance2D:
        return Instance2D(self.objects, self.directions, self.k if k is None else k, self.c if c is None else c)


@dataclass(frozen=True)
class Solution:
    lines: tuple[Line, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))

    def __len__(self) -> int:
        return len(self.lines)


def stabs(line: Line, obj: ConvexObject) -> bool:
    lo, hi = obj.extent(line.direction)
    if obj.closed:
        return lo <= line.offset <= hi
    return lo < line.offset < hi


def _closedness(objects: Sequence[ConvexObject]) -> bool:
    flags = {o.closed for o in objects}
    if len(flags) > 1:
        raise GeometryError("heterogeneous closedness")
    return flags.pop() if flags else True


def canonical_lines(objects: Sequence[ConvexObject], direction: Direction) -> list[Line]:
    """One line per combinatorial class of ``direction``-lines that stabs something.

    Closed objects: the supporting lines (every class boundary).  Open objects:
    the midpoint of each gap between consecutive distinct boundary offsets,
    kept only if it stabs at least one object.
    """
    closed = _closedness(objects)
    bounds = sorted({v for o in objects for v in o.extent(direction)})
    if closed:
        return [Line(direction, b) for b in bounds]
    out = []
    for a, b in zip(bounds, bounds[1:]):
        line = Line(direction, (a + b) / 2)
        if any(stabs(line, o) for o in objects):
            out.append(line)
    return out


def stab_set(line: Line, instance: Instance2D) -> frozenset[int]:
    instance.direction_index(line.direction)
    return frozenset(i for i, o in enumerate(instance.objects) if stabs(line, o))


def robustness_delta(objects: Sequence[ConvexObject], directions: Sequence[Direction] = AXIS_DIRECTIONS) -> Fraction:
    """Largest delta for which the set is delta-robust along ``directions``.

    Half the smallest diameter of a nonempty common projection; the smallest is
    always attained by a pair (or a single object) because the intersection of
    intervals is ``[max lo, min hi]``.
    """
    if not objects:
        raise GeometryError("robustness of an empty set is undefined")
    best: Fraction | None = None
    for d in directions:
        # (lo, hi, closed) deduplicated; identical intervals add no new pairs
        ivs = sorted({(*o.extent(d), o.closed) for o in objects})
        for i, (lo1, hi1, c1) in enumerate(ivs):
            width = hi1 - lo1
            if best is None or width < best:
                best = width
            for lo2, hi2, c2 in ivs[i + 1:]:
                if lo2 > hi1:
                    break
                lo, hi = lo2, min(hi1, hi2)
                if lo < hi or (lo == hi and c1 and c2):
                    if hi - lo < best:
                        best = hi - lo
    return best / 2


@dataclass(frozen=True)
class LinearMap2:
    a11: Fraction
    a12: Fraction
    a21: Fraction
    a22: Fraction

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, name, rational(getattr(self, name)))
        if self.det == 0:
            raise GeometryError("singular map")

    @classmethod
    def identity(cls) -> LinearMap2:
        return cls(1, 0, 0, 1)

    @classmethod
    def scaling(cls, sx, sy=None) -> LinearMap2:
        return cls(sx, 0, 0, sx if sy is None else sy)

    @property
    def det(self) -> Fraction:
        return self.a11 * self.a22 - self.a12 * self.a21

    def inverse(self) -> LinearMap2:
        d = self.det
        return LinearMap2(self.a22 / d, -self.a12 / d, -self.a21 / d, self.a11 / d)

    def __matmul__(self, other: LinearMap2) -> LinearMap2:
        return LinearMap2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def apply_point(self, p) -> Point:
        x, y = _point(p)
        return (self.a11 * x + self.a12 * y, self.a21 * x + self.a22 * y)

    def apply_direction(self, d: Direction) -> Direction:
        return Direction.from_vector(*self.apply_point(d.vector))

    def apply_line(self, line: Line) -> Line:
        # normal transforms by the inverse transpose; rescaling the normal rescales the offset
        inv = self.inverse()
        a, b = line.direction.normal
        na, nb = inv.a11 * a + inv.a21 * b, inv.a12 * a + inv.a22 * b
        ca, cb, f = _canonical_normal(na, nb)
        direction = Direction((ca, cb), self.apply_point(line.direction.vector))
        return Line(direction, line.offset * f)

    def apply_object(self, obj: ConvexObject) -> ConvexObject:
        return ConvexObject(tuple(self.apply_point(v) for v in obj.vertices), obj.closed)


def apply_map(linear_map: LinearMap2, instance: Instance2D) -> Instance2D:
    return Instance2D(
        tuple(linear_map.apply_object(o) for o in instance.objects),
        tuple(linear_map.apply_direction(d) for d in instance.directions),
        instance.k,
        instance.c,
    )


def _separated(p: ConvexObject, q: ConvexObject, axis) -> bool:
    a, b = axis
    pv = [a * x + b * y for x, y in p.vertices]
    qv = [a * x + b * y for x, y in q.vertices]
    if p.closed and q.closed:
        return max(pv) < min(qv) or max(qv) < min(pv)
    return max(pv) <= min(qv) or max(qv) <= min(pv)


def objects_disjoint(p: ConvexObject, q: ConvexObject) -> bool:
    """Exact separating-axis test; open objects may share boundary points."""
    for obj in (p, q):
        for ex, ey in obj.edges():
            if _separated(p, q, (-ey, ex)):
                return True
    return False


def pairwise_disjoint(objects: Sequence[ConvexObject]) -> bool:
    """True iff no two objects intersect; sweeps over x-extents to skip far pairs."""
    order = sorted(range(len(objects)), key=lambda i: objects[i].extent(VERTICAL)[0])
    active: list[int] = []
    for i in order:
        lo, hi = objects[i].extent(VERTICAL)
        active = [j for j in active if objects[j].extent(VERTICAL)[1] >= lo]
        for j in active:
            if not objects_disjoint(objects[i], objects[j]):
                return False
        active.append(i)
    return True
