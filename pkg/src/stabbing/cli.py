"""Command-line front end.

Exit codes: 0 on a clean run, 1 when a verification finds a disagreement,
2 on usage or input errors, 3 when an exhaustive routine refuses to run.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import balls as B
from . import squares as S
from .errors import GeometryError, GuardExceededError, KernelInvariantError, LayoutMismatchError, ParseError
from .fileio import (
    parse_graph,
    parse_instance,
    parse_solution,
    serialize_graph,
    serialize_instance,
    serialize_solution,
)
from .generators import random_digraph, random_graph, random_rectangle_instance, random_square_instance
from .geometry import Instance2D, robustness_delta
from .oracle import brute_force_stab
from .solver import check_shallowness, stab_fpt
from .svg import render_svg


class UsageError(Exception):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _plane(args) -> Instance2D:
    inst = parse_instance(_read(args.input))
    if not isinstance(inst, Instance2D):
        raise UsageError("this command needs a 'stab2d' instance")
    if args.k is not None or getattr(args, "c", None) is not None:
        inst = inst.with_budget(args.k, getattr(args, "c", None))
    return inst


def _digraph(args) -> S.Digraph:
    if args.graph:
        G = parse_graph(_read(args.graph))
        if not isinstance(G, S.Digraph):
            raise UsageError("expected a 'digraph' file")
        return G
    if args.n is None:
        raise UsageError("give --graph FILE or --n N (with --seed) for a random digraph")
    return random_digraph(random.Random(args.seed), args.n)


def _graph(args) -> B.Graph:
    if args.graph:
        G = parse_graph(_read(args.graph))
        if not isinstance(G, B.Graph):
            raise UsageError("expected a 'graph' file")
        return G
    if args.n is None:
        raise UsageError("give --graph FILE or --n N (with --seed) for a random graph")
    return random_graph(random.Random(args.seed), args.n)


def cmd_solve(args) -> int:
    inst = _plane(args)
    if len(inst.directions) > 1 and inst.objects:
        measured = check_shallowness(inst)
        if measured > inst.c:
            raise UsageError(f"declared c={inst.c} is below the measured shallowness {measured}")
    res = stab_fpt(inst)
    _write(serialize_solution(res.witness), args.output)
    return 0


def cmd_oracle(args) -> int:
    res = brute_force_stab(_plane(args))
    _write(serialize_solution(res.witness), args.output)
    return 0


def cmd_shallow(args) -> int:
    _write(f"{check_shallowness(_plane(args))}\n", args.output)
    return 0


def cmd_robust(args) -> int:
    inst = _plane(args)
    _write(f"{robustness_delta(inst.objects, inst.directions)}\n", args.output)
    return 0


def cmd_gen_random(args) -> int:
    make = random_square_instance if args.shape == "square" else random_rectangle_instance
    inst = make(args.seed, args.count, args.k)
    if args.shape == "rect" and inst.objects:
        inst = inst.with_budget(c=check_shallowness(inst))
    _write(serialize_instance(inst), args.output)
    return 0


def cmd_gen_graph(args) -> int:
    rng = random.Random(args.seed)
    G = random_digraph(rng, args.n, args.p) if args.directed else random_graph(rng, args.n, args.p)
    _write(serialize_graph(G), args.output)
    return 0


def cmd_gen_squares(args) -> int:
    G = _digraph(args)
    strict = not args.allow_small
    v = args.variant
    if v == "s-prime":
        inst, _ = S.build_s_prime(G, args.k)
    elif v == "s":
        inst, _ = S.build_s(G, args.k)
    elif v == "s-star":
        inst, _ = S.build_s_star(G, args.k, strict)
    elif v == "r-star":
        inst = S.build_r_star(G, args.k, strict)
    else:
        inst, _, _ = S.build_u_star(G, args.k, strict)
    _write(serialize_instance(inst), args.output)
    return 0


def cmd_gen_balls(args) -> int:
    _write(serialize_instance(B.build_ball_instance(_graph(args), args.k)), args.output)
    return 0


def cmd_verify_squares(args) -> int:
    G = _digraph(args)
    builders = {
        "s-prime": S.build_s_prime,
        "s": S.build_s,
        "s-star": lambda G, k: S.build_s_star(G, k, not args.allow_small),
    }
    if args.variant not in builders:
        raise UsageError("verify-squares supports the s-prime, s and s-star variants")
    inst, layout = builders[args.variant](G, args.k)
    got = S.strip_verify(inst, layout)
    want = S.has_clique(G, args.k)
    out = [
        "YES" if got else "NO",
        f"clique {'YES' if want else 'NO'}",
        "agree" if got == want else "DISAGREE",
    ]
    _write("\n".join(out) + "\n", args.output)
    return 0 if got == want else 1


def cmd_verify_balls(args) -> int:
    G = _graph(args)
    inst = B.build_ball_instance(G, args.k)
    classes = B.enumerate_stabbing_classes(inst, tol=args.tolerance)
    want = B.independent_sets(G, args.k)
    audit = B.margin_audit(inst)
    out = ["YES" if classes else "NO"]
    out += ["class " + " ".join(map(str, c)) for c in sorted(classes)]
    out.append(f"balls {len(inst.balls)} expected {B.expected_ball_count(G.n, args.k, len(G.edges))}")
    out.append(
        f"margins scaffold_min {audit.scaffold_min:.3e} kept_min {audit.kept_min:.3e} "
        f"excluded_max {audit.excluded_max:.3e}"
    )
    out.append("agree" if classes == want else "DISAGREE")
    _write("\n".join(out) + "\n", args.output)
    return 0 if classes == want else 1


def cmd_render(args) -> int:
    inst = _plane(args)
    sol = parse_solution(_read(args.solution)) if args.solution else None
    _write(render_svg(inst, sol), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stabbing", description="Line stabbing solver and reduction generators.")
    sub = p.add_subparsers(dest="command", required=True)

    def io(sp, need_input=True):
        if need_input:
            sp.add_argument("--input", "-i", default="-", help="instance file ('-' for stdin)")
        sp.add_argument("--output", "-o", default="-", help="output file ('-' for stdout)")

    def graph_src(sp):
        sp.add_argument("--graph", help="graph file; otherwise a random graph from --n and --seed")
        sp.add_argument("--n", type=int)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--k", type=int, required=True)

    for name, fn, help_ in (
        ("solve", cmd_solve, "decide with the FPT solver"),
        ("oracle", cmd_oracle, "decide by exhaustive search"),
    ):
        sp = sub.add_parser(name, help=help_)
        io(sp)
        sp.add_argument("--k", type=int)
        sp.add_argument("--c", type=int)
        sp.set_defaults(func=fn)
    for name, fn, help_ in (
        ("shallow", cmd_shallow, "print the measured shallowness"),
        ("robust", cmd_robust, "print the robustness delta"),
    ):
        sp = sub.add_parser(name, help=help_)
        io(sp)
        sp.set_defaults(func=fn, k=None, c=None)

    sp = sub.add_parser("gen-random", help="random disjoint boxes")
    io(sp, need_input=False)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--shape", choices=("square", "rect"), default="square")
    sp.set_defaults(func=cmd_gen_random)

    sp = sub.add_parser("gen-graph", help="random graph or digraph file")
    io(sp, need_input=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--directed", action="store_true")
    sp.set_defaults(func=cmd_gen_graph)

    for name, fn, choices, default in (
        ("gen-squares", cmd_gen_squares, S.VARIANTS, "s"),
        ("verify-squares", cmd_verify_squares, ("s-prime", "s", "s-star"), "s"),
    ):
        sp = sub.add_parser(name)
        io(sp, need_input=False)
        graph_src(sp)
        sp.add_argument("--variant", choices=choices, default=default)
        sp.add_argument("--allow-small", action="store_true", help="skip the n >= 6k+4 requirement")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("gen-balls")
    io(sp, need_input=False)
    graph_src(sp)
    sp.set_defaults(func=cmd_gen_balls)

    sp = sub.add_parser("verify-balls")
    io(sp, need_input=False)
    graph_src(sp)
    sp.add_argument("--tolerance", type=float, default=B.DEFAULT_TOLERANCE)
    sp.set_defaults(func=cmd_verify_balls)

    sp = sub.add_parser("render", help="SVG picture of an instance and optional solution")
    io(sp)
    sp.add_argument("--solution", help="solution file as written by solve/oracle")
    sp.set_defaults(func=cmd_render, k=None, c=None)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (
        UsageError,
        ParseError,
        GeometryError,
        LayoutMismatchError,
        KernelInvariantError,
        ValueError,
        OSError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
