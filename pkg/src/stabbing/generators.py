"""Seeded random instances and exhaustive graph families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .balls import Graph
from .geometry import AXIS_DIRECTIONS, ConvexObject, Instance2D, rectangle
from .squares import Digraph


@dataclass(frozen=True)
class BoxConfig:
    """Random axis-parallel translates of a ``width x height`` box on a half-unit grid."""

    count: int = 12
    width: Fraction = Fraction(1)
    height: Fraction = Fraction(1)
    span: int = 8
    closed: bool = True
    step: Fraction = Fraction(1, 2)


def _boxes_apart(a: tuple, b: tuple, closed: bool) -> bool:
    ax, ay, w, h = a
    bx, by, _, _ = b
    if closed:
        return ax + w < bx or bx + w < ax or ay + h < by or by + h < ay
    return ax + w <= bx or bx + w <= ax or ay + h <= by or by + h <= ay


def random_boxes(rng: random.Random, cfg: BoxConfig, tries: int = 200) -> list[ConvexObject]:
    """Up to ``cfg.count`` pairwise disjoint boxes; stops early if the region fills up."""
    slots = int(cfg.span / cfg.step)
    placed: list[tuple] = []
    for _ in range(cfg.count):
        for _ in range(tries):
            cand = (rng.randint(0, slots) * cfg.step, rng.randint(0, slots) * cfg.step, cfg.width, cfg.height)
            if all(_boxes_apart(cand, p, cfg.closed) for p in placed):
                placed.append(cand)
                break
    return [rectangle(x, y, w, h, cfg.closed) for x, y, w, h in placed]


def random_square_instance(seed: int, count: int | None = None, k: int | None = None, span: int = 8) -> Instance2D:
    """Disjoint closed unit squares with axis directions and ``c = 1``."""
    rng = random.Random(seed)
    count = rng.randint(1, 12) if count is None else count
    k = rng.randint(1, 3) if k is None else k
    objs = random_boxes(rng, BoxConfig(count=count, span=span))
    return Instance2D(tuple(objs), AXIS_DIRECTIONS, k, 1)


def random_rectangle_instance(seed: int, count: int | None = None, k: int | None = None, span: int = 9) -> Instance2D:
    """Disjoint closed translates of a 2x1 rectangle; ``c`` is left at 1 for the caller to measure."""
    rng = random.Random(seed)
    count = rng.randint(1, 12) if count is None else count
    k = rng.randint(1, 3) if k is None else k
    objs = random_boxes(rng, BoxConfig(count=count, width=Fraction(2), span=span))
    return Instance2D(tuple(objs), AXIS_DIRECTIONS, k, 1)


def planted_square_instance(seed: int, count: int, k: int = 2, jitter: int = 1000) -> Instance2D:
    """``count`` disjoint closed unit squares spread over ``k`` horizontal rows, each row
    crossed by the line ``y = 3 * row + 1``; bottoms are jittered so projections differ."""
    rng = random.Random(seed)
    objs = []
    per_row = -(-count // k)
    for idx in range(count):
        row, col = divmod(idx, per_row)
        y = 3 * row + Fraction(rng.randint(0, jitter - 1), jitter)
        objs.append(rectangle(2 * col, y, 1, 1, closed=True))
    return Instance2D(tuple(objs), AXIS_DIRECTIONS, k, 1)


def random_digraph(rng: random.Random, n: int, p: float = 0.5) -> Digraph:
    arcs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return Digraph(n, frozenset(a for a in arcs if rng.random() < p))


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every arc subset, in bitmask order over the arcs sorted lexicographically."""
    arcs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for mask in range(1 << len(arcs)):
        yield Digraph(n, frozenset(a for b, a in enumerate(arcs) if mask >> b & 1))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, frozenset(e for e in combinations(range(1, n + 1), 2) if rng.random() < p))


def all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(e for b, e in enumerate(pairs) if mask >> b & 1))
