"""Independent-set-to-ball-stabbing construction in R^(2k).

Lines through the origin are described by their unit direction.  A scaffold
of ``2nk`` balls leaves exactly the directions ``l(u_1, ..., u_k)`` whose
projection on every coordinate plane ``E_i`` points to one of ``2n``
regularly spaced apices.  Constraint balls then remove the classes where two
coordinates repeat a vertex or hit both ends of an edge.

Everything here is floating point; stabbing is decided by the sign of a
margin and the margins are reported so the separation can be audited.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .errors import GuardExceededError

DEFAULT_TOLERANCE = 1e-12
CLASS_LIMIT = 10**6


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop ({u}, {v}) not allowed")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) outside [1, {self.n}]")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.n < 4:
            raise ValueError("the ball construction needs n >= 4 vertices")

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


@dataclass(frozen=True)
class Ball:
    center: tuple[float, ...]
    radius: float
    # ("scaffold", i, u) or ("constraint", i, j, u, v, "+"/"-"); v > n marks the shifted partner
    tag: tuple


@dataclass(frozen=True)
class BallInstance:
    dim: int
    n: int
    k: int
    radius: float
    balls: tuple[Ball, ...]
    mu: float
    lam: float

    def centers(self) -> np.ndarray:
        return np.array([b.center for b in self.balls], dtype=float)


def ball_radius(n: int, k: int) -> float:
    return math.sqrt(1 - (1 - math.cos(math.pi / n)) / (2 * k))


def mu_value(n: int) -> float:
    return 1 / (9 * n**2 + 36 * n**4 + 2)


def constraint_norm(n: int, k: int) -> float:
    """Center norm halfway (in squared norm) through the admissible window for constraint balls."""
    r, mu = ball_radius(n, k), mu_value(n)
    return math.sqrt((r * r + k * r * r / (k - mu * mu)) / 2)


def scaffold_rotation(n: int) -> float:
    """Angle added to every scaffold center.

    With centers at multiples of pi/n the surviving apices sit at odd
    multiples of pi/(2n) only when n is even; for odd n they would sit at the
    multiples of pi/n instead.  Turning the scaffold by pi/(2n) for odd n puts
    the apices back at the odd multiples that the line directions use.
    """
    return math.pi / (2 * n) if n % 2 else 0.0


def apex_angle(u: int, n: int) -> float:
    return (2 * u - 1) * math.pi / (2 * n)


def line_direction(tup: Sequence[int], n: int, k: int) -> np.ndarray:
    if len(tup) != k:
        raise ValueError(f"tuple of length {len(tup)}, expected {k}")
    out = np.empty(2 * k)
    for i, u in enumerate(tup):
        if not 1 <= u <= 2 * n:
            raise ValueError(f"component {u} outside [1, {2 * n}]")
        a = apex_angle(u, n)
        out[2 * i], out[2 * i + 1] = math.cos(a), math.sin(a)
    return out / math.sqrt(k)


def _z_direction(n: int, k: int, i: int, j: int, u: int, v: int) -> np.ndarray:
    mu = mu_value(n)
    ti, tj = apex_angle(u, n), apex_angle(v, n)
    z = np.zeros(2 * k)
    z[2 * i] = mu * (math.cos(ti) - 3 * n * math.sin(ti))
    z[2 * i + 1] = mu * (math.sin(ti) + 3 * n * math.cos(ti))
    z[2 * j] = mu * (-math.cos(tj) - 6 * n * n * math.sin(tj))
    z[2 * j + 1] = mu * (-math.sin(tj) + 6 * n * n * math.cos(tj))
    return z


def _constraint_set(n: int, k: int, i: int, j: int, u: int, v: int, r: float) -> list[Ball]:
    rho = constraint_norm(n, k)
    out = []
    for w in (v, v + n):
        z = _z_direction(n, k, i, j, u, w)
        c = rho * z / np.linalg.norm(z)
        for sign, cc in (("+", c), ("-", -c)):
            out.append(Ball(tuple(float(x) for x in cc), r, ("constraint", i + 1, j + 1, u, w, sign)))
    return out


def build_ball_instance(G: Graph, k: int) -> BallInstance:
    n = G.n
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    r = ball_radius(n, k)
    turn = scaffold_rotation(n)
    balls: list[Ball] = []
    for i in range(k):
        for u in range(1, 2 * n + 1):
            c = np.zeros(2 * k)
            a = (u - 1) * math.pi / n + turn
            c[2 * i], c[2 * i + 1] = math.cos(a), math.sin(a)
            balls.append(Ball(tuple(float(x) for x in c), r, ("scaffold", i + 1, u)))
    for i, j in combinations(range(k), 2):
        for u in range(1, n + 1):
            balls.extend(_constraint_set(n, k, i, j, u, u, r))
    for u, v in sorted(G.edges):
        for i in range(k):
            for j in range(k):
                if i != j:
                    balls.extend(_constraint_set(n, k, i, j, u, v, r))
    return BallInstance(2 * k, n, k, r, tuple(balls), mu_value(n), 1 / math.sqrt(k))


def expected_ball_count(n: int, k: int, num_edges: int) -> int:
    return 2 * n * k + 4 * math.comb(k, 2) * (n + 2 * num_edges)


def ball_stabbed(direction: Sequence[float], ball: Ball, tol: float = DEFAULT_TOLERANCE) -> tuple[bool, float]:
    d = np.asarray(direction, dtype=float)
    if abs(np.linalg.norm(d) - 1) > 1e-9:
        raise ValueError("direction must be a unit vector")
    c = np.asarray(ball.center)
    margin = float(np.dot(c, d) ** 2 - (np.dot(c, c) - ball.radius**2))
    return margin >= -tol, margin


def margin_matrix(instance: BallInstance, directions: np.ndarray) -> np.ndarray:
    """``margins[t, b]`` for direction row ``t`` against ball ``b``."""
    C = instance.centers()
    slack = np.einsum("ij,ij->i", C, C) - instance.radius**2
    return (directions @ C.T) ** 2 - slack[None, :]


def class_tuples(n: int, k: int, limit: int = CLASS_LIMIT) -> list[tuple[int, ...]]:
    if n**k > limit:
        raise GuardExceededError(f"n^k = {n**k} classes exceeds the limit {limit}")
    return list(product(range(1, n + 1), repeat=k))


def tuple_directions(tuples: Sequence[Sequence[int]], n: int, k: int) -> np.ndarray:
    T = np.asarray(tuples, dtype=float).reshape(len(tuples), k)
    ang = (2 * T - 1) * math.pi / (2 * n)
    out = np.empty((len(tuples), 2 * k))
    out[:, 0::2] = np.cos(ang)
    out[:, 1::2] = np.sin(ang)
    return out / math.sqrt(k)


def enumerate_stabbing_classes(
    instance: BallInstance, tol: float = DEFAULT_TOLERANCE, limit: int = CLASS_LIMIT
) -> set[tuple[int, ...]]:
    """Vertex sets of the classes whose representative line stabs every ball."""
    tuples = class_tuples(instance.n, instance.k, limit)
    ok = (margin_matrix(instance, tuple_directions(tuples, instance.n, instance.k)) >= -tol).all(axis=1)
    return {tuple(sorted(t)) for t, good in zip(tuples, ok) if good}


def sign_flip_representatives(tup: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """All tuples ``u + n*mask`` (components read mod 2n) of the same class."""
    out = []
    for mask in product((0, n), repeat=len(tup)):
        out.append(tuple((u - 1 + s) % (2 * n) + 1 for u, s in zip(tup, mask)))
    return out


def excluded(ball: Ball, tup: Sequence[int], n: int) -> bool:
    """Whether the construction means ``ball`` to miss the line ``l(tup)``."""
    if ball.tag[0] != "constraint":
        return False
    _, i, j, u, v, _ = ball.tag
    a, b = tup[i - 1], tup[j - 1]
    return (a, b) == (u, v) or ((a - 1 + n) % (2 * n) + 1, (b - 1 + n) % (2 * n) + 1) == (u, v)


@dataclass(frozen=True)
class MarginAudit:
    scaffold_min: float
    kept_min: float
    kept_bound: float
    excluded_max: float

    @property
    def separation(self) -> float:
        """Smallest distance from zero among constraint margins."""
        return min(abs(self.kept_min), abs(self.excluded_max))


def margin_audit(instance: BallInstance, tuples: Iterable[Sequence[int]] | None = None) -> MarginAudit:
    """Extreme margins over the given tuples (default: all of ``[n]^k``).

    ``kept_bound`` is ``mu^2 |c|^2 / k - (|c|^2 - r^2)``, the positive floor every
    non-excluded constraint margin should clear.
    """
    n, k = instance.n, instance.k
    tuples = class_tuples(n, k) if tuples is None else [tuple(t) for t in tuples]
    M = margin_matrix(instance, tuple_directions(tuples, n, k))
    scaffold = [b for b, ball in enumerate(instance.balls) if ball.tag[0] == "scaffold"]
    kept_min, excl_max = math.inf, -math.inf
    for t, tup in enumerate(tuples):
        for b, ball in enumerate(instance.balls):
            if ball.tag[0] != "constraint":
                continue
            if excluded(ball, tup, n):
                excl_max = max(excl_max, M[t, b])
            else:
                kept_min = min(kept_min, M[t, b])
    rho2 = constraint_norm(n, k) ** 2
    bound = instance.mu**2 * rho2 / k - (rho2 - instance.radius**2)
    scaffold_min = float(M[:, scaffold].min()) if scaffold else math.inf
    return MarginAudit(scaffold_min, float(kept_min), bound, float(excl_max))


def independent_sets(G: Graph, k: int) -> set[tuple[int, ...]]:
    if not 1 <= k <= G.n:
        raise ValueError("need 1 <= k <= n")
    return {
        S for S in combinations(range(1, G.n + 1), k) if not any(G.adjacent(a, b) for a, b in combinations(S, 2))
    }


def has_independent_set(G: Graph, k: int) -> bool:
    if not 1 <= k <= G.n:
        raise ValueError("need 1 <= k <= n")
    return any(
        not any(G.adjacent(a, b) for a, b in combinations(S, 2)) for S in combinations(range(1, G.n + 1), k)
    )
