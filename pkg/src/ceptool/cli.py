"""Command-line interface.

Subcommands: nash, cycles, vertices, check, ergodic, moments, report.
Inputs and outputs use the JSON interchange format from ceptool.core
(rationals as "p/q" strings).  Exit codes: 0 success, 1 failed validation,
2 bad input.  All outputs are deterministic for a fixed invocation; the
sampling seed defaults to a fixed constant.  CEPTOOL_THREADS caps the
process pool used by the heavier enumerations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import svgfig
from .cecheck import find_ce_violation, is_ce_projection, projections
from .core import (
    FiniteGame,
    format_rational,
    game_from_json,
    measure_from_json,
    parse_rational,
)
from .cycles import count_extreme_ce, enumerate_extreme_ce, f_ratio
from .ergodic import (
    RotationParams,
    SegmentMeasure,
    conditional_mean_residuals,
    equidistribution_check,
    sample,
    support_segments,
)
from .moments import MomentBasis, caratheodory_split, moments_of, non_describability_demo
from .nash import enumerate_extreme_nash
from .polytope import (
    ce_vertices,
    classify_vertices,
    measure_to_vector,
    vector_to_measure,
)
from .report import DEFAULT_SEED, run_report

# InvalidGameError, SupportError, HypothesisError, PatternError and the
# polytope errors all derive from ValueError
USER_ERRORS = (ValueError, OSError, KeyError)


def _default_workers() -> int:
    raw = os.environ.get("CEPTOOL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _load_game(path: str) -> FiniteGame:
    return game_from_json(Path(path).read_text(encoding="utf-8"))


def _compact_measure(mu) -> str:
    triples = [
        [format_rational(x), format_rational(y), format_rational(w)]
        for (x, y), w in mu.items()
    ]
    return json.dumps(triples, separators=(",", " "))


def _compact_strategy(sigma) -> str:
    pairs = [[format_rational(v), format_rational(w)] for v, w in sigma.items()]
    return json.dumps(pairs, separators=(",", " "))


def _plural(n: int, noun: str, plural: str) -> str:
    return f"{n} {noun if n == 1 else plural}"


def cmd_nash(args) -> int:
    game = _load_game(args.game)
    pairs = enumerate_extreme_nash(game)
    for pair in pairs:
        print(_compact_strategy(pair.sigma))
        print(_compact_strategy(pair.tau))
    print(_plural(len(pairs), "extreme Nash equilibrium", "extreme Nash equilibria"))
    return 0


def cmd_cycles(args) -> int:
    from .core import example_game

    game = example_game(args.n)
    measures = enumerate_extreme_ce(game, workers=args.threads)
    for mu in measures:
        print(_compact_measure(mu))
    closed = count_extreme_ce(args.n)
    if len(measures) != closed:
        print(
            f"enumeration found {len(measures)} but the closed form gives {closed}",
            file=sys.stderr,
        )
        return 1
    print(_plural(len(measures), "extreme correlated equilibrium",
                  "extreme correlated equilibria"))
    print(f"normalized count f({args.n}) = {format_rational(f_ratio(args.n))}")
    if args.emit_svg:
        outdir = Path(args.emit_svg)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, mu in enumerate(measures):
            text = svgfig.render_support_dots(mu, f"staircase support {i}")
            (outdir / f"support_{i:04d}.svg").write_text(text, encoding="utf-8")
        print(f"wrote {len(measures)} SVG plots to {outdir}")
    return 0


def cmd_vertices(args) -> int:
    game = _load_game(args.game)
    vs = ce_vertices(game)
    print(_plural(len(vs), "vertex", "vertices"))
    if args.dump:
        for v in vs:
            print(_compact_measure(vector_to_measure(game, v)))
    print(classify_vertices(game, vs).summary())
    if args.compare_cycles:
        cycles = {
            measure_to_vector(game, mu.normalized())
            for mu in enumerate_extreme_ce(game, workers=args.threads)
        }
        if set(vs.vertices) == cycles:
            print(f"{_plural(len(vs), 'vertex', 'vertices')}; sets EQUAL")
        else:
            print(
                f"sets DIFFER: {len(vs)} vertices vs {len(cycles)} staircase measures"
            )
            return 1
    return 0


def cmd_check(args) -> int:
    game = _load_game(args.game)
    mu = measure_from_json(Path(args.measure).read_text(encoding="utf-8"))
    if args.method == "proj":
        if is_ce_projection(game, mu):
            print("PASS: both projection measures vanish")
            return 0
        pair = projections(mu)
        axis, bad = ("x", pair.kx) if not pair.kx.is_zero() else ("y", pair.ky)
        point, weight = next(iter(bad.items()))
        print(
            f"FAIL: payoff-weighted {axis}-projection is nonzero at "
            f"{format_rational(point)} (value {format_rational(weight)})"
        )
        return 1
    witness = find_ce_violation(game, mu)
    if witness is None:
        print("PASS: no profitable deviation exists")
        return 0
    print(f"FAIL: {witness.describe()}")
    return 1


def _build_params(args) -> RotationParams:
    a = parse_rational(args.a)
    b = parse_rational(args.b)
    if args.alpha_form == "sqrt5":
        scale = parse_rational(args.alpha_num or "1")
        return RotationParams.sqrt5(float(a), float(b), float(scale))
    if not args.alpha_num:
        raise ValueError("--alpha-num P/Q is required with --alpha-form rational")
    rho = Fraction(args.alpha_num)
    return RotationParams.rational_rotation(a, b, rho.numerator, rho.denominator)


def cmd_ergodic(args) -> int:
    params = _build_params(args)
    print(
        f"parameters: a={params.a}, b={params.b}, alpha={params.alpha} "
        f"({'irrational' if params.irrational else 'rational'} rotation number)"
    )
    for (x0, y0), (x1, y1) in support_segments(params):
        print(
            f"segment ({float(x0):.9f}, {float(y0):.9f}) -> "
            f"({float(x1):.9f}, {float(y1):.9f})"
        )
    masses = SegmentMeasure(params).quadrant_masses(args.quad_points)
    print("quadrant masses: " + ", ".join(f"{m:.9f}" for m in masses))
    rx, ry = conditional_mean_residuals(params, args.bins, args.quad_points)
    print(f"max conditional-mean residuals: x-axis {rx:.3e}, y-axis {ry:.3e}")
    disc = equidistribution_check(params, args.orbit, 20)
    print(f"orbit equidistribution deviation after {args.orbit} steps: {disc:.5f}")
    if args.samples:
        pts = sample(params, args.samples, args.seed)
        pos = pts[pts[:, 0] > 0]
        print(
            f"{args.samples} samples (seed {args.seed}); "
            f"mean y given x > 0: {pos[:, 1].mean():.5f}"
        )
    if args.emit_svg:
        Path(args.emit_svg).write_text(
            svgfig.render_rotation(params), encoding="utf-8"
        )
        print(f"wrote support plot to {args.emit_svg}")
    return 0


def cmd_moments(args) -> int:
    if args.demo is not None:
        demo = non_describability_demo(args.demo)
        print(demo.summary())
        return 0
    if not args.measure or not args.basis:
        raise ValueError("need --measure and --basis (or --demo D)")
    mu = measure_from_json(Path(args.measure).read_text(encoding="utf-8"))
    basis = MomentBasis.parse(args.basis)
    vec = moments_of(mu, basis)
    print(
        "moment vector: (" + ", ".join(format_rational(v) for v in vec) + ")"
    )
    split = caratheodory_split(mu, basis)
    if split is None:
        print("extreme-for-this-basis: no moment-preserving split exists")
        return 0
    mu1, mu2 = split
    print("split mu = (mu1 + mu2)/2 with equal moment vectors:")
    sys.stdout.write("mu1 = " + _compact_measure(mu1) + "\n")
    sys.stdout.write("mu2 = " + _compact_measure(mu2) + "\n")
    return 0


def cmd_report(args) -> int:
    results = run_report(
        args.out, big=args.big, seed=args.seed, workers=args.threads
    )
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(
        f"{len(results) - len(failed)}/{len(results)} checks passed; "
        f"summary written to {Path(args.out) / 'report.csv'}"
    )
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ceptool",
        description=(
            "Exact laboratory for extreme Nash and correlated equilibria of "
            "bilinear games on [-1, 1]"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nash", help="enumerate extreme Nash pairs of a game file")
    p.add_argument("--game", required=True, help="game JSON file")
    p.set_defaults(func=cmd_nash)

    p = sub.add_parser(
        "cycles", help="enumerate extreme correlated equilibria of the size-n game"
    )
    p.add_argument("--n", type=int, required=True, help="strategy values per sign")
    p.add_argument("--emit-svg", metavar="DIR", help="write one support plot per measure")
    p.add_argument("--threads", type=int, default=_default_workers())
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("vertices", help="enumerate polytope vertices of a game file")
    p.add_argument("--game", required=True)
    p.add_argument("--dump", action="store_true", help="print every vertex measure")
    p.add_argument(
        "--compare-cycles",
        action="store_true",
        help="compare the vertex set against the staircase enumeration",
    )
    p.add_argument("--threads", type=int, default=_default_workers())
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("check", help="test a measure file for equilibrium")
    p.add_argument("--game", required=True)
    p.add_argument("--measure", required=True)
    p.add_argument("--method", choices=["def", "proj"], default="def")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ergodic", help="rotation-equilibrium diagnostics")
    p.add_argument("--a", default="1/5", help="left endpoint (rational string)")
    p.add_argument("--b", default="4/5", help="right endpoint (rational string)")
    p.add_argument(
        "--alpha-form",
        choices=["sqrt5", "rational"],
        default="sqrt5",
        help="alpha = C/sqrt(5), or rotation number P/Q",
    )
    p.add_argument(
        "--alpha-num",
        help="C for sqrt5 form (default 1) or P/Q for rational form",
    )
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--bins", type=int, default=16)
    p.add_argument("--quad-points", type=int, default=10_000)
    p.add_argument("--orbit", type=int, default=100_000)
    p.add_argument("--emit-svg", metavar="FILE")
    p.set_defaults(func=cmd_ergodic)

    p = sub.add_parser("moments", help="moment vectors and measure splitting")
    p.add_argument("--measure")
    p.add_argument("--basis", help='comma-separated monomials, e.g. "1,x,y,xy"')
    p.add_argument(
        "--demo",
        type=int,
        metavar="D",
        help="show an extreme equilibrium no D-moment description permits",
    )
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("report", help="run the full cross-validation suite")
    p.add_argument("--out", default="ceptool-report", help="output directory")
    p.add_argument("--big", action="store_true", help="include the n=3 vertex check")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=_default_workers())
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
