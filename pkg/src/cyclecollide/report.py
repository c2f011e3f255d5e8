"""Multi-method convergence tables for the collision probability.

One `CollisionReportRow` per requested n, with any subset of the five
methods populated:

    exact       - reduced-fraction arithmetic, rendered as a 20-digit
                  decimal string (ground truth, exceeds double precision)
    quadrature  - unit-circle integral identity (auto-picks the O(n)
                  product integrand for n <= 512, the O(1) Gamma form above)
    eq2         - the large-n kernel integral divided by 2 pi
    asymptotic  - closed form 1 / (2 sqrt(pi log n))
    montecarlo  - paired sampling with binomial standard error

Serialization is byte-stable: a fixed CSV column order, floats always
rendered with 17 significant digits, and a hand-assembled JSON document
so both formats carry identical value strings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .analytic import (
    EXACT_PRODUCT_AUTO_MAX,
    I_n,
    IntegrandKind,
    p_asymptotic,
    p_quadrature_result,
)
from .exact import EXACT_ROUTE_CEILING, p_exact
from .montecarlo import estimate_collision
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, QuadratureConvergenceError

__all__ = [
    "VERSION",
    "CSV_COLUMNS",
    "METHODS",
    "CollisionReportRow",
    "ReportConfig",
    "run_report",
    "render_csv",
    "render_json",
]

VERSION = "0.1.0"

CSV_COLUMNS = (
    "n",
    "p_exact",
    "p_quadrature",
    "quad_error_estimate",
    "p_eq2",
    "p_asymptotic",
    "ratio_to_asymptotic",
    "mc_p_hat",
    "mc_std_err",
)

METHODS = ("exact", "quadrature", "eq2", "asymptotic", "montecarlo")


@dataclass(frozen=True)
class CollisionReportRow:
    n: int
    p_exact: str | None = None
    p_quadrature: float | None = None
    quad_error_estimate: float | None = None
    p_eq2: float | None = None
    p_asymptotic: float | None = None
    ratio_to_asymptotic: float | None = None
    mc_p_hat: float | None = None
    mc_std_err: float | None = None
    # Per-row method failures (exact route above its ceiling, quadrature
    # that ran out of subdivisions).  Serialized in JSON only; the CSV
    # schema is the fixed nine columns above.
    errors: tuple[str, ...] = ()


@dataclass(frozen=True)
class ReportConfig:
    n_values: tuple[int, ...]
    methods: tuple[str, ...]
    quad: QuadratureConfig = DEFAULT_CONFIG
    mc_pairs: int = 100000
    seed: int = 0
    output_format: str = "csv"
    output_path: str | None = None

    def __post_init__(self) -> None:
        n_values = tuple(int(n) for n in self.n_values)
        if not n_values:
            raise ValueError("n_values must be nonempty")
        if any(b <= a for a, b in zip(n_values, n_values[1:])):
            raise ValueError("n_values must be strictly increasing")
        if n_values[0] < 1:
            raise ValueError("n_values must be positive")
        methods = tuple(m for m in METHODS if m in set(self.methods))
        if not methods:
            raise ValueError(f"methods must be a nonempty subset of {METHODS}")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")
        if ("asymptotic" in methods or "eq2" in methods) and n_values[0] < 2:
            raise ValueError("asymptotic and eq2 methods require all n >= 2")
        if self.mc_pairs < 1:
            raise ValueError("mc_pairs must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.output_format not in ("csv", "json"):
            raise ValueError("output_format must be 'csv' or 'json'")
        object.__setattr__(self, "n_values", n_values)
        object.__setattr__(self, "methods", methods)


def _exact_decimal(value: Fraction, significant_digits: int = 20) -> str:
    with localcontext() as ctx:
        ctx.prec = significant_digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _compute_row(n: int, config: ReportConfig) -> CollisionReportRow:
    methods = config.methods
    errors: list[str] = []
    fields: dict = {"n": n}
    best_p: float | None = None

    if "montecarlo" in methods:
        est = estimate_collision(n, config.mc_pairs, kind=None, seed=config.seed)
        fields["mc_p_hat"] = est.p_hat
        fields["mc_std_err"] = est.std_err
        best_p = est.p_hat

    if "eq2" in methods:
        try:
            res = I_n(n, config.quad)
            fields["p_eq2"] = res.value / (2.0 * math.pi)
        except QuadratureConvergenceError as exc:
            fields["p_eq2"] = exc.best.value / (2.0 * math.pi)
            errors.append(f"eq2: {exc}")
        best_p = fields["p_eq2"]

    if "quadrature" in methods:
        try:
            res = p_quadrature_result(n, None, config.quad)
            if n == EXACT_PRODUCT_AUTO_MAX:
                _crosscheck_boundary(res.value, n, config.quad)
            fields["p_quadrature"] = res.value
            fields["quad_error_estimate"] = res.abs_error_estimate
        except QuadratureConvergenceError as exc:
            fields["p_quadrature"] = exc.best.value
            fields["quad_error_estimate"] = exc.best.abs_error_estimate
            errors.append(f"quadrature: {exc}")
        best_p = fields["p_quadrature"]

    if "exact" in methods:
        if n <= EXACT_ROUTE_CEILING:
            exact = p_exact(n)
            fields["p_exact"] = _exact_decimal(exact.fraction)
            best_p = exact.approx
        else:
            errors.append(
                f"exact: n={n} above the documented exact-route ceiling "
                f"{EXACT_ROUTE_CEILING}; use the quadrature route"
            )

    if "asymptotic" in methods:
        fields["p_asymptotic"] = p_asymptotic(n)
    if best_p is not None and n >= 2:
        fields["ratio_to_asymptotic"] = best_p / p_asymptotic(n)

    return CollisionReportRow(**fields, errors=tuple(errors))


def _crosscheck_boundary(value: float, n: int, quad: QuadratureConfig) -> None:
    # At the integrand hand-off point both routes are evaluated; a
    # disagreement here means a defect, not a tolerance issue.
    alt = p_quadrature_result(n, IntegrandKind.GAMMA_RATIO, quad)
    if abs(alt.value - value) > max(
        10.0 * alt.abs_error_estimate, 1e-9 * abs(value)
    ):
        raise RuntimeError(
            f"integrand routes disagree at the n={n} hand-off: "
            f"{value!r} vs {alt.value!r}"
        )


def run_report(config: ReportConfig) -> list[CollisionReportRow]:
    """One row per configured n, in ascending n order.

    Per-row method failures are recorded on the row (exact route above
    its ceiling; non-converged quadrature keeps its best estimate), never
    raised.
    """
    return [_compute_row(n, config) for n in config.n_values]


def _fmt_float(x: float | None) -> str:
    return "" if x is None else f"{x:.17g}"


def render_csv(rows: list[CollisionReportRow]) -> str:
    """Fixed-schema CSV; missing values are empty fields, newline endings."""
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(
            ",".join(
                [
                    str(row.n),
                    row.p_exact or "",
                    _fmt_float(row.p_quadrature),
                    _fmt_float(row.quad_error_estimate),
                    _fmt_float(row.p_eq2),
                    _fmt_float(row.p_asymptotic),
                    _fmt_float(row.ratio_to_asymptotic),
                    _fmt_float(row.mc_p_hat),
                    _fmt_float(row.mc_std_err),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _json_str(s: str) -> str:
    # The schema only ever carries printable ASCII; escape the two
    # characters JSON requires.
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _json_float(x: float | None) -> str:
    return "null" if x is None else f"{x:.17g}"


def _render_row_json(row: CollisionReportRow) -> str:
    parts = [
        f'"n": {row.n}',
        f'"p_exact": {_json_str(row.p_exact) if row.p_exact is not None else "null"}',
        f'"p_quadrature": {_json_float(row.p_quadrature)}',
        f'"quad_error_estimate": {_json_float(row.quad_error_estimate)}',
        f'"p_eq2": {_json_float(row.p_eq2)}',
        f'"p_asymptotic": {_json_float(row.p_asymptotic)}',
        f'"ratio_to_asymptotic": {_json_float(row.ratio_to_asymptotic)}',
        f'"mc_p_hat": {_json_float(row.mc_p_hat)}',
        f'"mc_std_err": {_json_float(row.mc_std_err)}',
        f'"errors": [{", ".join(_json_str(e) for e in row.errors)}]',
    ]
    return "{" + ", ".join(parts) + "}"


def _render_config_json(config: ReportConfig) -> str:
    quad = config.quad
    out_path = (
        _json_str(config.output_path) if config.output_path is not None else "null"
    )
    return (
        "{"
        f'"n_values": [{", ".join(str(n) for n in config.n_values)}], '
        f'"methods": [{", ".join(_json_str(m) for m in config.methods)}], '
        f'"quad": {{"rel_tol": {quad.rel_tol:.17g}, "abs_tol": {quad.abs_tol:.17g}, '
        f'"max_subdivisions": {quad.max_subdivisions}}}, '
        f'"mc_pairs": {config.mc_pairs}, '
        f'"seed": {config.seed}, '
        f'"output_format": {_json_str(config.output_format)}, '
        f'"output_path": {out_path}'
        "}"
    )


def render_json(rows: list[CollisionReportRow], config: ReportConfig) -> str:
    """JSON document with the same values (identical digit strings) as the
    CSV rendering, plus the config and a schema version."""
    body = ",\n    ".join(_render_row_json(r) for r in rows)
    return (
        "{\n"
        f'  "rows": [\n    {body}\n  ],\n'
        f'  "config": {_render_config_json(config)},\n'
        f'  "version": {_json_str(VERSION)}\n'
        "}\n"
    )
