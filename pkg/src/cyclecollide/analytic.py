"""Integral and closed-form routes to the cycle-count collision probability.

The starting point is the coefficient power-sum identity: for a polynomial
g(z) = sum a_k z^k with real coefficients,

    sum_k a_k^2 = (1/2pi) integral_0^{2pi} |g(e^{i theta})|^2 d theta.

Applied to the rising factorial x (x+1) ... (x+n-1), whose coefficients
count permutations by cycle number, the collision probability becomes an
integral that can be evaluated three ways:

* EXACT_PRODUCT - |prod_{j<n} (e^{i theta} + j)|^2 / (n!)^2 summed term by
  term in log space, O(n) per evaluation.  This route is an identity, not
  an approximation; quadrature tolerance is the only error.
* GAMMA_RATIO - the same quantity through Gamma(z+n)/Gamma(z), O(1) per
  evaluation, usable up to n ~ 1e8 and beyond.
* LIMIT_KERNEL - the large-n kernel exp(2(cos theta - 1) log n) /
  |Gamma(e^{i theta})|^2 whose integral I(n) tends to sqrt(pi / log n);
  dividing by 2 pi gives the asymptotic collision estimate.

All integrands are even about theta = pi, so integration is always done
on [0, pi] and doubled.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Callable

import numpy as np

from .gammafn import (
    EULER_GAMMA,
    _log_gamma_array,
    log_gamma_ratio,
    recip_gamma_abs_sq,
)
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureConvergenceError,
    QuadratureResult,
    quadrature,
)

__all__ = [
    "EXACT_PRODUCT_AUTO_MAX",
    "IntegrandKind",
    "harmonic",
    "integrand",
    "I_n",
    "p_quadrature",
    "p_quadrature_result",
    "laplace_I",
    "p_asymptotic",
]

_TWO_PI = 2.0 * math.pi

# Largest n for which the auto-selected quadrature route uses the O(n)
# exact-product integrand; above it the O(1) Gamma-ratio form takes over.
EXACT_PRODUCT_AUTO_MAX = 512


class IntegrandKind(Enum):
    """Which unit-circle integrand to evaluate."""

    EXACT_PRODUCT = "exact-product"
    GAMMA_RATIO = "gamma-ratio"
    LIMIT_KERNEL = "limit-kernel"


def harmonic(m: int) -> float:
    """Harmonic number H_m = 1 + 1/2 + ... + 1/m (H_0 = 0).

    Exact-rounded summation up to 1e6 terms; beyond that the asymptotic
    expansion log m + gamma + 1/(2m) - 1/(12 m^2), whose next omitted term
    is ~ 1/(120 m^4) < 1e-26 there.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m <= 10**6:
        return math.fsum(1.0 / r for r in range(1, m + 1))
    inv = 1.0 / m
    return math.log(m) + EULER_GAMMA + 0.5 * inv - inv * inv / 12.0


def _check_theta_range(theta: np.ndarray) -> None:
    if np.any(theta < 0.0) or np.any(theta > _TWO_PI):
        raise ValueError("theta must lie in [0, 2*pi]")


def _exact_product_values(n: int, theta: np.ndarray) -> np.ndarray:
    # log |prod_{j=0}^{n-1} (e^{i theta} + j)|^2 = sum_j log(1 + 2 j cos + j^2),
    # the j = 0 term being log 1 = 0.  The j = 1 factor vanishes at theta = pi;
    # nonpositive arguments are masked and force the value to exactly 0.
    ct = np.cos(theta)
    log_norm = 2.0 * math.lgamma(n + 1)
    out = np.zeros_like(theta)
    acc = np.zeros_like(theta)
    dead = np.zeros(theta.shape, dtype=bool)
    chunk = max(1, (1 << 22) // max(1, theta.size))
    for start in range(1, n, chunk):
        j = np.arange(start, min(n - 1, start + chunk - 1) + 1, dtype=np.float64)
        args = 1.0 + np.multiply.outer(ct, 2.0 * j) + j * j
        bad = args <= 0.0
        if bad.any():
            dead |= bad.any(axis=-1)
            args = np.where(bad, 1.0, args)
        acc += np.log(args).sum(axis=-1)
    ok = ~dead
    out[ok] = np.exp(acc[ok] - log_norm)
    return out


def _gamma_ratio_values(n: int, theta: np.ndarray) -> np.ndarray:
    # |Gamma(z+n) / (Gamma(z) n!)|^2 with 1/|Gamma(z)|^2 in its entire,
    # pole-free form; the 2 + 2 cos factor is exactly 0 at theta = pi.
    # (For n = 1 the true integrand is identically 1 and the limit at
    # theta = pi is 1, not 0; the isolated point never matters to the
    # integral and is left as the product form's 0.)
    z = np.cos(theta) + 1j * np.sin(theta)
    front = np.maximum(2.0 + 2.0 * np.cos(theta), 0.0)
    expo = 2.0 * np.real(log_gamma_ratio(n, z)) - 2.0 * np.real(
        _log_gamma_array(z + 2.0)
    )
    return np.where(front > 0.0, front * np.exp(expo), 0.0)


def _limit_kernel_values(n: float, theta: np.ndarray) -> np.ndarray:
    log_n = math.log(n)
    return np.exp(2.0 * (np.cos(theta) - 1.0) * log_n) * recip_gamma_abs_sq(theta)


def _integrand_fn(kind: IntegrandKind, n: float) -> Callable[[np.ndarray], np.ndarray]:
    if kind is IntegrandKind.EXACT_PRODUCT:
        if n < 1 or int(n) != n:
            raise ValueError(f"EXACT_PRODUCT requires integer n >= 1, got {n}")
        return lambda t: _exact_product_values(int(n), t)
    if kind is IntegrandKind.GAMMA_RATIO:
        if n < 1 or int(n) != n:
            raise ValueError(f"GAMMA_RATIO requires integer n >= 1, got {n}")
        return lambda t: _gamma_ratio_values(int(n), t)
    if kind is IntegrandKind.LIMIT_KERNEL:
        if not n > 1:
            raise ValueError(f"LIMIT_KERNEL requires real n > 1, got {n}")
        return lambda t: _limit_kernel_values(float(n), t)
    raise ValueError(f"unknown integrand kind: {kind!r}")


def integrand(
    kind: IntegrandKind, n: float, theta: float | np.ndarray
) -> float | np.ndarray:
    """Evaluate one of the unit-circle integrands at theta in [0, 2*pi].

    EXACT_PRODUCT and GAMMA_RATIO take integer n >= 1 and agree to
    ~1e-10 relative or better (the product form is the oracle);
    LIMIT_KERNEL takes real n > 1.
    """
    f = _integrand_fn(kind, n)
    arr = np.asarray(theta, dtype=np.float64)
    _check_theta_range(arr)
    out = f(np.atleast_1d(arr))
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def _half_range(
    f: Callable[[np.ndarray], np.ndarray],
    scale: float,
    config: QuadratureConfig,
) -> QuadratureResult:
    # Integrands are even about theta = pi: integrate [0, pi], then apply
    # scale (2 for the full circle, 1/pi for the normalized mean).
    try:
        r = quadrature(f, 0.0, math.pi, config)
    except QuadratureConvergenceError as exc:
        best = exc.best
        raise QuadratureConvergenceError(
            QuadratureResult(
                best.value * scale,
                best.abs_error_estimate * abs(scale),
                best.evaluations,
            ),
            exc.tolerance * abs(scale),
        ) from None
    return QuadratureResult(
        r.value * scale, r.abs_error_estimate * abs(scale), r.evaluations
    )


def I_n(n: float, config: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """Full-circle integral of the LIMIT_KERNEL integrand for real n >= 2.

    For large n the value behaves like sqrt(pi / log n); `laplace_I` gives
    that closed form and the ratio of the two tends to 1 from above with a
    leading correction of order 1/log n.
    """
    if not n >= 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return _half_range(_integrand_fn(IntegrandKind.LIMIT_KERNEL, n), 2.0, config)


def p_quadrature_result(
    n: int,
    kind: IntegrandKind | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
) -> QuadratureResult:
    """Collision probability by quadrature, with its error estimate.

    kind=None picks EXACT_PRODUCT for n <= 512 and GAMMA_RATIO above.
    This route evaluates an identity, so up to quadrature tolerance it
    reproduces the exact-arithmetic value for every n, large or small.
    """
    if n < 1 or int(n) != n:
        raise ValueError(f"n must be a positive integer, got {n}")
    if kind is None:
        kind = (
            IntegrandKind.EXACT_PRODUCT
            if n <= EXACT_PRODUCT_AUTO_MAX
            else IntegrandKind.GAMMA_RATIO
        )
    if kind is IntegrandKind.LIMIT_KERNEL:
        raise ValueError("LIMIT_KERNEL is not a collision-probability identity; "
                         "use I_n for the asymptotic kernel")
    return _half_range(_integrand_fn(kind, n), 1.0 / math.pi, config)


def p_quadrature(
    n: int,
    kind: IntegrandKind | None = None,
    config: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """Collision probability as the normalized mean of |g|^2 on the circle."""
    return p_quadrature_result(n, kind, config).value


def laplace_I(n: float) -> float:
    """Closed-form large-n value sqrt(pi / log n) of the kernel integral.

    The kernel concentrates at theta = 0 where it is a Gaussian of width
    1/sqrt(2 log n); integrating that Gaussian gives this expression.
    """
    if not n > 1:
        raise ValueError(f"n must be > 1, got {n}")
    return math.sqrt(math.pi / math.log(n))


def p_asymptotic(n: float) -> float:
    """Limiting collision probability 1 / (2 sqrt(pi log n)).

    Identically laplace_I(n) / (2 pi).
    """
    if not n > 1:
        raise ValueError(f"n must be > 1, got {n}")
    return 1.0 / (2.0 * math.sqrt(math.pi * math.log(n)))
