"""Command-line front end.

Subcommands:
    exact    - f(n) and p(n) from exact arithmetic, optionally the full row
    collide  - p(n) by one chosen method
    table    - multi-method convergence table as CSV or JSON
    verify   - run the built-in verification suite

Exit codes: 0 success, 1 computation/validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from .analytic import I_n, p_asymptotic, p_quadrature_result
from .exact import ExactProbability, f_exact, p_exact, stirling_row
from .montecarlo import SamplerKind, estimate_collision
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, QuadratureConvergenceError
from .report import (
    METHODS,
    ReportConfig,
    render_csv,
    render_json,
    run_report,
)
from .verify import run_verify

_SAMPLERS = {
    "permutation": SamplerKind.PERMUTATION_DIRECT,
    "bernoulli": SamplerKind.BERNOULLI_SUM,
}


def parse_n_values(spec: str) -> tuple[int, ...]:
    """Either a comma list ("3,5,10") or a geometric "start:stop:factor"
    progression (inclusive of stop when hit exactly)."""
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError("geometric spec must be start:stop:factor")
        start, stop, factor = (int(p) for p in parts)
        if start < 1 or stop < start or factor < 2:
            raise ValueError("need 1 <= start <= stop and factor >= 2")
        values = []
        v = start
        while v <= stop:
            values.append(v)
            v *= factor
        return tuple(values)
    return tuple(int(p) for p in spec.split(","))


def _quad_config(tol: float | None) -> QuadratureConfig:
    if tol is None:
        return DEFAULT_CONFIG
    return QuadratureConfig(rel_tol=tol)


def _cmd_exact(args: argparse.Namespace) -> int:
    n = args.n
    f_val = f_exact(n)
    prob = ExactProbability.from_fraction(Fraction(f_val, math.factorial(n) ** 2))
    if args.json:
        fields = [
            f'"n": {n}',
            f'"f": {f_val}',
            f'"p_numerator": {prob.numerator}',
            f'"p_denominator": {prob.denominator}',
            f'"p_approx": {prob.approx:.17g}',
        ]
        if args.row:
            row = stirling_row(n)
            fields.append(f'"row": [{", ".join(str(c) for c in row.coeffs)}]')
        print("{" + ", ".join(fields) + "}")
        return 0
    print(f"n = {n}")
    print(f"f(n) = {f_val}")
    print(f"p(n) = {prob.numerator}/{prob.denominator} = {prob.approx:.17g}")
    if args.row:
        print("row:", " ".join(str(c) for c in stirling_row(n).coeffs))
    return 0


def _cmd_collide(args: argparse.Namespace) -> int:
    n = args.n
    method = args.method
    if method == "exact":
        prob = p_exact(n)
        print(f"p = {prob.approx:.17g}")
        print(f"exact = {prob.numerator}/{prob.denominator}")
    elif method == "quadrature":
        try:
            res = p_quadrature_result(n, None, _quad_config(args.tol))
        except QuadratureConvergenceError as exc:
            print(f"error: {exc}", file=sys.stderr)
            print(f"p = {exc.best.value:.17g} (not converged)")
            return 1
        print(f"p = {res.value:.17g}")
        print(f"error estimate = {res.abs_error_estimate:.3e}")
        print(f"evaluations = {res.evaluations}")
    elif method == "eq2":
        try:
            res = I_n(n, _quad_config(args.tol))
        except QuadratureConvergenceError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"p = {res.value / (2.0 * math.pi):.17g}")
        print(f"kernel integral = {res.value:.17g}")
    elif method == "asymptotic":
        print(f"p = {p_asymptotic(n):.17g}")
    elif method == "montecarlo":
        kind = _SAMPLERS[args.sampler] if args.sampler else None
        est = estimate_collision(n, args.pairs, kind=kind, seed=args.seed)
        print(f"p = {est.p_hat:.17g}")
        print(f"std err = {est.std_err:.17g}")
        print(f"collisions = {est.collisions}/{est.samples}")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    config = ReportConfig(
        n_values=parse_n_values(args.n),
        methods=tuple(args.methods.split(",")),
        quad=_quad_config(args.tol),
        mc_pairs=args.pairs,
        seed=args.seed,
        output_format=args.format,
        output_path=args.out,
    )
    rows = run_report(config)
    text = render_csv(rows) if args.format == "csv" else render_json(rows, config)
    if args.out:
        with open(args.out, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclecollide",
        description=(
            "Probability that two independent uniform random permutations "
            "of n letters have the same number of cycles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ex = sub.add_parser("exact", help="exact f(n) and p(n)")
    p_ex.add_argument("--n", type=int, required=True)
    p_ex.add_argument("--row", action="store_true", help="print the full cycle-count row")
    p_ex.add_argument("--json", action="store_true")

    p_co = sub.add_parser("collide", help="p(n) by one method")
    p_co.add_argument("--n", type=int, required=True)
    p_co.add_argument("--method", required=True, choices=METHODS)
    p_co.add_argument("--tol", type=float, help="quadrature relative tolerance")
    p_co.add_argument("--pairs", type=int, default=100000)
    p_co.add_argument("--sampler", choices=sorted(_SAMPLERS))
    p_co.add_argument("--seed", type=int, default=0)

    p_ta = sub.add_parser("table", help="multi-method convergence table")
    p_ta.add_argument(
        "--n", required=True,
        help="comma list (3,5,10) or geometric start:stop:factor (100:1000000:10)",
    )
    p_ta.add_argument("--methods", required=True, help=f"comma list from {','.join(METHODS)}")
    p_ta.add_argument("--format", choices=("csv", "json"), default="csv")
    p_ta.add_argument("--out", help="output path (default stdout)")
    p_ta.add_argument("--tol", type=float, help="quadrature relative tolerance")
    p_ta.add_argument("--pairs", type=int, default=100000)
    p_ta.add_argument("--seed", type=int, default=0)

    sub.add_parser("verify", help="run the verification suite")

    return parser


def main(argv: list[str] | None = None) -> int:
    # f(n) and the row entries near the exact-route ceiling run to ~1e5
    # digits; lift the interpreter's int-to-str guard so they print.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000)
    args = build_parser().parse_args(argv)
    try:
        if args.command == "exact":
            return _cmd_exact(args)
        if args.command == "collide":
            return _cmd_collide(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "verify":
            return run_verify()
    except (ValueError, QuadratureConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
