"""Write SVG pictures of a square construction, with a stabbing solution when one exists."""

from __future__ import annotations

import argparse
import random
from pathlib import Path

from stabbing import squares as S
from stabbing.generators import random_digraph
from stabbing.svg import render_svg


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--outdir", type=Path, default=Path("figures"))
    args = ap.parse_args()

    G = random_digraph(random.Random(args.seed), args.n)
    args.outdir.mkdir(parents=True, exist_ok=True)
    for variant, build in (
        ("s-prime", S.build_s_prime),
        ("s", S.build_s),
        ("s-star", lambda G, k: S.build_s_star(G, k, strict=False)),
    ):
        inst, layout = build(G, args.k)
        sol = S.strip_solve(inst, layout)
        path = args.outdir / f"{variant}_n{args.n}_k{args.k}_seed{args.seed}.svg"
        path.write_text(render_svg(inst, sol, title=f"{variant}, arcs {sorted(G.edges)}"))
        print(f"{path}: {len(inst.objects)} squares, {'stabbed' if sol else 'no solution'}")
    u, _, _ = S.build_u_star(G, args.k, strict=False)
    path = args.outdir / f"u-star_n{args.n}_k{args.k}_seed{args.seed}.svg"
    path.write_text(render_svg(u, title="sheared unit squares"))
    print(f"{path}: {len(u.objects)} squares")


if __name__ == "__main__":
    main()
