"""Sweep random graphs through both hardness constructions and compare with brute force.

Squares: strip_verify on S (and optionally S*) against has_clique.
Balls: stabbing classes against independent sets, plus the margin audit.
"""

from __future__ import annotations

import argparse
import random
import time

from stabbing import balls as B
from stabbing import squares as S
from stabbing.generators import random_digraph, random_graph


def sweep_squares(n: int, k: int, graphs: int, shrunk: bool) -> None:
    agree = yes = 0
    t0 = time.perf_counter()
    for seed in range(graphs):
        G = random_digraph(random.Random(seed), n)
        want = S.has_clique(G, k)
        ok = S.strip_verify(*S.build_s(G, k)) == want
        if shrunk:
            ok = ok and S.strip_verify(*S.build_s_star(G, k, strict=False)) == want
        agree += ok
        yes += want
    print(f"squares n={n} k={k}: {agree}/{graphs} agree, {yes} with a clique, {time.perf_counter() - t0:.1f}s")


def sweep_balls(n: int, k: int, graphs: int) -> None:
    agree = 0
    worst_kept, worst_excl = float("inf"), float("-inf")
    t0 = time.perf_counter()
    for seed in range(graphs):
        G = random_graph(random.Random(seed), n)
        inst = B.build_ball_instance(G, k)
        agree += B.enumerate_stabbing_classes(inst) == B.independent_sets(G, k)
        audit = B.margin_audit(inst)
        worst_kept = min(worst_kept, audit.kept_min)
        worst_excl = max(worst_excl, audit.excluded_max)
    print(
        f"balls n={n} k={k}: {agree}/{graphs} agree, kept_min={worst_kept:.3e} "
        f"excluded_max={worst_excl:.3e}, {time.perf_counter() - t0:.1f}s"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=20)
    ap.add_argument("--shrunk", action="store_true", help="also check S* (n=3 only is quick)")
    args = ap.parse_args()
    for n in (3, 4, 5):
        sweep_squares(n, 2, args.graphs, args.shrunk and n == 3)
    for n, k in ((4, 2), (5, 2), (5, 3), (6, 2), (6, 3)):
        sweep_balls(n, k, args.graphs)


if __name__ == "__main__":
    main()
