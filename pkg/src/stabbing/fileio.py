"""Line-oriented text formats for instances, solutions and graphs.

Plane instances::

    stab2d 1
    k 2
    c 1
    directions 2
    1 0
    0 1
    objects 1
    poly closed 4 0 0 1 0 1 1 0 1

Ball instances::

    stabballs 1
    dim 4
    n 4
    k 2
    radius 0.9626924198811565
    balls 56
    1.0 0.0 0.0 0.0 scaffold:1:1
    ...

Graphs use ``digraph 1`` or ``graph 1`` followed by ``n``, ``edges m`` and
``m`` lines ``u v``.  Rationals are written ``p/q`` (or plain integers),
floats with ``repr`` so they read back bit for bit.  ``#`` starts a comment.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .balls import Ball, BallInstance, Graph, mu_value
from .errors import GeometryError, ParseError
from .geometry import ConvexObject, Direction, Instance2D, Line, Solution, polygon
from .squares import Digraph

Token = tuple[str, int]  # text, 1-based column


class _Reader:
    def __init__(self, text: str):
        self._lines: list[tuple[int, list[Token]]] = []
        for no, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            toks: list[Token] = []
            col = 0
            for piece in body.split():
                col = body.index(piece, col)
                toks.append((piece, col + 1))
                col += len(piece)
            if toks:
                self._lines.append((no, toks))
        self._pos = 0
        self.last_line = len(text.splitlines())

    def done(self) -> bool:
        return self._pos >= len(self._lines)

    def next(self, what: str) -> tuple[int, list[Token]]:
        if self.done():
            raise ParseError(f"unexpected end of input, expected {what}", self.last_line + 1, 1)
        item = self._lines[self._pos]
        self._pos += 1
        return item

    def keyed(self, key: str) -> tuple[int, Token]:
        no, toks = self.next(f"'{key} <value>'")
        if toks[0][0] != key:
            raise ParseError(f"expected '{key}', found '{toks[0][0]}'", no, toks[0][1])
        if len(toks) != 2:
            col = toks[2][1] if len(toks) > 2 else toks[0][1] + len(key)
            raise ParseError(f"'{key}' takes exactly one value", no, col)
        return no, toks[1]

    def keyed_int(self, key: str, minimum: int = 0) -> int:
        no, tok = self.keyed(key)
        value = _int(tok, no)
        if value < minimum:
            raise ParseError(f"'{key}' must be at least {minimum}", no, tok[1])
        return value

    def finish(self) -> None:
        if not self.done():
            no, toks = self._lines[self._pos]
            raise ParseError(f"unexpected trailing content '{toks[0][0]}'", no, toks[0][1])


def _int(tok: Token, line: int) -> int:
    try:
        return int(tok[0])
    except ValueError:
        raise ParseError(f"expected an integer, found '{tok[0]}'", line, tok[1]) from None


def _rat(tok: Token, line: int) -> Fraction:
    text = tok[0]
    try:
        if "e" in text.lower():
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational 'p/q', found '{text}'", line, tok[1]) from None


def _float(tok: Token, line: int) -> float:
    try:
        return float(tok[0])
    except ValueError:
        raise ParseError(f"expected a number, found '{tok[0]}'", line, tok[1]) from None


# ---------------------------------------------------------------------------
# instances


def parse_instance(text: str) -> Union[Instance2D, BallInstance]:
    rd = _Reader(text)
    no, toks = rd.next("a header line")
    header = " ".join(t for t, _ in toks)
    if header == "stab2d 1":
        return _parse_2d(rd)
    if header == "stabballs 1":
        return _parse_balls(rd)
    raise ParseError(f"unknown header '{header}', expected 'stab2d 1' or 'stabballs 1'", no, toks[0][1])


def _parse_2d(rd: _Reader) -> Instance2D:
    k = rd.keyed_int("k")
    c = rd.keyed_int("c", minimum=1)
    r = rd.keyed_int("directions", minimum=1)
    dirs: list[Direction] = []
    for _ in range(r):
        no, toks = rd.next("a direction '<dx> <dy>'")
        if len(toks) != 2:
            raise ParseError("a direction line holds exactly two rationals", no, toks[0][1])
        dx, dy = _rat(toks[0], no), _rat(toks[1], no)
        try:
            d = Direction.from_vector(dx, dy)
        except GeometryError as e:
            raise ParseError(str(e), no, toks[0][1]) from None
        if d in dirs:
            raise ParseError(f"duplicate direction {dx} {dy}", no, toks[0][1])
        dirs.append(d)
    m = rd.keyed_int("objects")
    objs: list[ConvexObject] = []
    for _ in range(m):
        no, toks = rd.next("an object 'poly <open|closed> <v> x1 y1 ...'")
        if toks[0][0] != "poly":
            raise ParseError(f"expected 'poly', found '{toks[0][0]}'", no, toks[0][1])
        if len(toks) < 3:
            raise ParseError("truncated object line", no, toks[-1][1])
        flag = toks[1][0]
        if flag not in ("open", "closed"):
            raise ParseError(f"expected 'open' or 'closed', found '{flag}'", no, toks[1][1])
        v = _int(toks[2], no)
        coords = toks[3:]
        if len(coords) != 2 * v:
            raise ParseError(f"object declares {v} vertices but lists {len(coords)} coordinates", no, toks[2][1])
        pts = [(_rat(coords[2 * i], no), _rat(coords[2 * i + 1], no)) for i in range(v)]
        try:
            objs.append(polygon(pts, closed=(flag == "closed")))
        except GeometryError as e:
            raise ParseError(str(e), no, toks[0][1]) from None
    rd.finish()
    if len({o.closed for o in objs}) > 1:
        raise ParseError("objects mix open and closed", rd.last_line, 1)
    return Instance2D(tuple(objs), tuple(dirs), k, c)


def _parse_tag(tok: Token, line: int) -> tuple:
    parts = tok[0].split(":")
    try:
        if parts[0] == "scaffold" and len(parts) == 3:
            return ("scaffold", int(parts[1]), int(parts[2]))
        if parts[0] == "constraint" and len(parts) == 6 and parts[5] in ("+", "-"):
            return ("constraint", *(int(p) for p in parts[1:5]), parts[5])
    except ValueError:
        pass
    raise ParseError(f"bad ball tag '{tok[0]}'", line, tok[1])


def _parse_balls(rd: _Reader) -> BallInstance:
    dim = rd.keyed_int("dim", minimum=2)
    n = rd.keyed_int("n", minimum=1)
    k = rd.keyed_int("k", minimum=1)
    if dim != 2 * k:
        raise ParseError(f"dim {dim} must equal 2k = {2 * k}", rd.last_line, 1)
    no, tok = rd.keyed("radius")
    radius = _float(tok, no)
    m = rd.keyed_int("balls")
    balls = []
    for _ in range(m):
        no, toks = rd.next("a ball line")
        if len(toks) != dim + 1:
            raise ParseError(f"a ball line holds {dim} coordinates and a tag", no, toks[0][1])
        center = tuple(_float(t, no) for t in toks[:dim])
        balls.append(Ball(center, radius, _parse_tag(toks[dim], no)))
    rd.finish()
    return BallInstance(dim, n, k, radius, tuple(balls), mu_value(n), 1 / k**0.5)


def _tag_text(tag: tuple) -> str:
    return ":".join(str(t) for t in tag)


def serialize_instance(instance: Union[Instance2D, BallInstance]) -> str:
    out: list[str] = []
    if isinstance(instance, BallInstance):
        out += ["stabballs 1", f"dim {instance.dim}", f"n {instance.n}", f"k {instance.k}"]
        out += [f"radius {instance.radius!r}", f"balls {len(instance.balls)}"]
        for b in instance.balls:
            out.append(" ".join(repr(float(x)) for x in b.center) + " " + _tag_text(b.tag))
        return "\n".join(out) + "\n"
    out += ["stab2d 1", f"k {instance.k}", f"c {instance.c}", f"directions {len(instance.directions)}"]
    out += [f"{d.vector[0]} {d.vector[1]}" for d in instance.directions]
    out.append(f"objects {len(instance.objects)}")
    for o in instance.objects:
        coords = " ".join(f"{x} {y}" for x, y in o.vertices)
        out.append(f"poly {'closed' if o.closed else 'open'} {len(o.vertices)} {coords}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# solutions: "YES"/"NO" then one "line <dx> <dy> <offset>" per line


def format_line(line: Line) -> str:
    d = line.direction
    return f"line {d.vector[0]} {d.vector[1]} {line.offset}"


def serialize_solution(solution: Solution | None) -> str:
    if solution is None:
        return "NO\n"
    return "\n".join(["YES"] + [format_line(l) for l in solution.lines]) + "\n"


def parse_solution(text: str) -> Solution | None:
    rd = _Reader(text)
    no, toks = rd.next("'YES' or 'NO'")
    if toks[0][0] == "NO":
        rd.finish()
        return None
    if toks[0][0] != "YES":
        raise ParseError(f"expected 'YES' or 'NO', found '{toks[0][0]}'", no, toks[0][1])
    lines = []
    while not rd.done():
        no, toks = rd.next("a solution line")
        if toks[0][0] != "line" or len(toks) != 4:
            raise ParseError("expected 'line <dx> <dy> <offset>'", no, toks[0][1])
        try:
            d = Direction.from_vector(_rat(toks[1], no), _rat(toks[2], no))
        except GeometryError as e:
            raise ParseError(str(e), no, toks[1][1]) from None
        lines.append(Line(d, _rat(toks[3], no)))
    return Solution(tuple(lines))


# ---------------------------------------------------------------------------
# graphs


def serialize_graph(G: Union[Digraph, Graph]) -> str:
    head = "digraph 1" if isinstance(G, Digraph) else "graph 1"
    edges = sorted(G.edges)
    return "\n".join([head, f"n {G.n}", f"edges {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def parse_graph(text: str) -> Union[Digraph, Graph]:
    rd = _Reader(text)
    no, toks = rd.next("a header line")
    header = " ".join(t for t, _ in toks)
    if header not in ("digraph 1", "graph 1"):
        raise ParseError(f"unknown header '{header}', expected 'digraph 1' or 'graph 1'", no, toks[0][1])
    n = rd.keyed_int("n", minimum=1)
    m = rd.keyed_int("edges")
    edges = []
    seen = set()
    for _ in range(m):
        eno, etoks = rd.next("an edge 'u v'")
        if len(etoks) != 2:
            raise ParseError("an edge line holds exactly two vertices", eno, etoks[0][1])
        e = (_int(etoks[0], eno), _int(etoks[1], eno))
        key = e if header == "digraph 1" else tuple(sorted(e))
        if key in seen:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", eno, etoks[0][1])
        seen.add(key)
        edges.append(e)
    rd.finish()
    try:
        if header == "digraph 1":
            return Digraph(n, frozenset(edges))
        return Graph(n, frozenset(edges))
    except ValueError as err:
        raise ParseError(str(err), no, 1) from None

