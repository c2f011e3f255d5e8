import math

import mpmath
import numpy as np
import pytest

from cyclecollide import (
    EULER_GAMMA,
    EULER_GAMMA_DIGITS,
    log_gamma,
    log_gamma_ratio,
    recip_gamma_abs_sq,
    weierstrass_partial,
)

mpmath.mp.dps = 40


def ref_loggamma(z):
    return complex(mpmath.loggamma(mpmath.mpc(z)))


def rel_or_abs(got, want):
    return abs(got - want) / max(1.0, abs(want))


# ------------------------------------------------------------ constant

def test_euler_gamma_digits():
    assert len(EULER_GAMMA_DIGITS.split(".")[1]) >= 30
    assert EULER_GAMMA == float(EULER_GAMMA_DIGITS)
    assert abs(float(mpmath.euler) - EULER_GAMMA) == 0.0
    assert EULER_GAMMA_DIGITS.startswith("0.5772156649015328606065120900824")


# ----------------------------------------------------------- log_gamma

def test_log_gamma_known_points():
    assert abs(log_gamma(1.0 + 0j)) <= 1e-14
    assert abs(log_gamma(2.0 + 0j)) <= 1e-14
    assert abs(log_gamma(0.5 + 0j) - math.log(math.pi) / 2) <= 1e-14
    assert abs(log_gamma(3.0 + 0j) - math.log(2.0)) <= 1e-14


@pytest.mark.parametrize("re", [-0.5, -0.3, -0.05, 0.1, 0.5, 1.0, 2.5, 7.7,
                                10.0, 42.0, 1e4, 1e9])
@pytest.mark.parametrize("im", [-2.0, -0.7, 0.0, 1e-7, 1.3, 2.0])
def test_log_gamma_accuracy_grid(re, im):
    z = complex(re, im)
    if im == 0.0 and re <= 0 and re == round(re):
        return
    assert rel_or_abs(log_gamma(z), ref_loggamma(z)) <= 1e-13


def test_log_gamma_dense_unit_circle():
    thetas = np.linspace(0.01, 2 * math.pi - 0.01, 400)
    zs = np.cos(thetas) + 1j * np.sin(thetas)
    got = log_gamma(zs + 2.0)
    worst = max(
        rel_or_abs(g, ref_loggamma(z)) for g, z in zip(got, zs + 2.0)
    )
    assert worst <= 1e-13


def test_log_gamma_array_shape_and_scalar_type():
    zs = np.array([[1.0 + 0j, 2.0 + 1j], [0.5 - 1j, 9.0 + 2j]])
    out = log_gamma(zs)
    assert out.shape == zs.shape
    assert isinstance(log_gamma(1.5 + 0.5j), complex)


@pytest.mark.parametrize("pole", [0.0, -1.0, -2.0, -17.0, 0j, -3.0 + 0.0j])
def test_log_gamma_poles_raise(pole):
    with pytest.raises(ValueError):
        log_gamma(pole)


def test_log_gamma_pole_in_array_raises():
    with pytest.raises(ValueError):
        log_gamma(np.array([1.0 + 0j, -2.0 + 0j]))


# ----------------------------------------------------- log_gamma_ratio

@pytest.mark.parametrize("n", [1, 5, 15, 16, 100, 10**4, 10**8])
def test_log_gamma_ratio_vs_reference(n):
    for theta in (0.3, 1.2, 2.8, 3.3, 5.5):
        z = complex(math.cos(theta), math.sin(theta))
        # n + z must be formed at full precision: rounding it to a double
        # first would already cost ~ digamma(n) * eps.
        want = complex(
            mpmath.loggamma(mpmath.mpf(n) + mpmath.mpc(z))
            - mpmath.loggamma(mpmath.mpf(n) + 1)
        )
        got = log_gamma_ratio(n, z)
        assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


# ------------------------------------------------- recip_gamma_abs_sq

def test_recip_gamma_endpoint_values():
    assert recip_gamma_abs_sq(0.0) == pytest.approx(1.0, abs=5e-15)
    assert recip_gamma_abs_sq(2 * math.pi) == pytest.approx(1.0, abs=5e-15)
    assert recip_gamma_abs_sq(math.pi) == 0.0  # exact: the pole factor is 0


def test_recip_gamma_nonnegative_and_accurate():
    thetas = np.linspace(0.0, 2 * math.pi, 257)
    vals = recip_gamma_abs_sq(thetas)
    assert (vals >= 0.0).all()
    for theta in (0.4, 1.5, 2.9, 3.6, 4.8, 6.1):
        z = mpmath.mpc(math.cos(theta), math.sin(theta))
        want = float(1 / abs(mpmath.gamma(z)) ** 2)
        assert recip_gamma_abs_sq(theta) == pytest.approx(want, rel=1e-12)


def test_recip_gamma_theta_domain():
    with pytest.raises(ValueError):
        recip_gamma_abs_sq(-0.1)
    with pytest.raises(ValueError):
        recip_gamma_abs_sq(2 * math.pi + 0.1)


# --------------------------------------------------- weierstrass_partial

def test_weierstrass_one_term():
    assert weierstrass_partial(1.0 + 0j, 1) == pytest.approx(2.0 / math.e, rel=1e-15)


def test_weierstrass_limits():
    # full product equals e^{-gamma z} / Gamma(z); truncation ~ z^2 / (2 terms)
    got = weierstrass_partial(1.0 + 0j, 200000)
    assert got.real == pytest.approx(math.exp(-EULER_GAMMA), rel=1e-5)
    assert abs(got.real - 0.5614594836) <= 1e-5
    got2 = weierstrass_partial(2.0 + 0j, 10**6)
    assert got2.real == pytest.approx(math.exp(-2 * EULER_GAMMA), rel=1e-5)
    assert abs(got2.real - 0.3152366801) <= 1e-5


@pytest.mark.parametrize("theta", [0.5, 1.0, 2.0])
def test_weierstrass_converges_on_circle(theta):
    z = complex(math.cos(theta), math.sin(theta))
    target = complex(mpmath.exp(-mpmath.euler * z) / mpmath.gamma(mpmath.mpc(z)))
    errors = [
        abs(weierstrass_partial(z, terms) - target) / abs(target)
        for terms in (1000, 2000, 4000, 8000)
    ]
    assert all(b < a for a, b in zip(errors, errors[1:]))
    assert errors[-1] <= 1e-3


def test_weierstrass_rejects_bad_input():
    with pytest.raises(ValueError):
        weierstrass_partial(0j, 10)
    with pytest.raises(ValueError):
        weierstrass_partial(1.0 + 0j, 0)
