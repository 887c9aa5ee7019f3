import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import scipy.integrate as si

from fracwell.quadrature import (
    NoBracket,
    NonDecaying,
    NonIntegrable,
    QuadSpec,
    integrate_adaptive,
    integrate_oscillatory,
    root_bisect,
)


# ---------------------------------------------------------------- adaptive

def test_adaptive_finite_interval():
    v, e = integrate_adaptive(lambda x: np.sin(x), 0.0, math.pi)
    assert abs(v - 2.0) <= max(e, 1e-12)


def test_adaptive_semi_infinite():
    v, e = integrate_adaptive(lambda x: np.exp(-x), 0.0, np.inf)
    assert abs(v - 1.0) <= max(e, 1e-12)


def test_adaptive_full_line_gaussian():
    v, e = integrate_adaptive(lambda x: np.exp(-x * x), -np.inf, np.inf)
    assert abs(v - math.sqrt(math.pi)) <= max(e, 1e-11)


def test_adaptive_endpoint_singularity():
    # open rule never evaluates the endpoint, so x^{-1/2} is fine; the
    # estimate is only marginally conservative on algebraic endpoints,
    # hence the slack factor
    v, e = integrate_adaptive(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0)
    assert abs(v - 2.0) <= max(2.0 * e, 1e-7)


def test_adaptive_degenerate_and_reversed():
    assert integrate_adaptive(lambda x: x, 3.0, 3.0) == (0.0, 0.0)
    v, _ = integrate_adaptive(lambda x: np.ones_like(x), 1.0, 0.0)
    assert_allclose(v, -1.0, rtol=1e-12)


def test_adaptive_error_estimate_is_honest():
    cases = [
        (lambda x: np.sin(x), 0.0, math.pi, 2.0),
        (lambda x: np.exp(-x), 0.0, np.inf, 1.0),
        (lambda x: 1.0 / (1.0 + x * x), 0.0, np.inf, math.pi / 2.0),
    ]
    for f, a, b, truth in cases:
        v, e = integrate_adaptive(f, a, b)
        assert abs(v - truth) <= max(e, 1e-12)


def test_adaptive_rejects_nonfinite_integrand():
    f = lambda x: np.where(x > 0.5, np.inf, 1.0)
    with pytest.raises(NonIntegrable):
        integrate_adaptive(f, 0.0, 1.0)


def test_adaptive_respects_tight_spec():
    spec = QuadSpec(abs_tol=1e-13, rel_tol=1e-12)
    v, e = integrate_adaptive(lambda x: np.exp(-x * x), 0.0, np.inf, spec)
    assert abs(v - math.sqrt(math.pi) / 2.0) < 5e-13


# ------------------------------------------------------------- oscillatory

def test_oscillatory_exponential_envelope():
    # int_0^inf e^{-p} cos(wp) dp = 1/(1+w^2)
    for omega in (1.0, 5.0):
        v, e = integrate_oscillatory(lambda p: np.exp(-p), omega)
        want = 1.0 / (1.0 + omega * omega)
        assert abs(v - want) <= max(e, 1e-10)


def test_oscillatory_high_frequency():
    v, e = integrate_oscillatory(lambda p: np.exp(-p), 50.0)
    assert abs(v - 1.0 / 2501.0) <= max(e, 1e-9)


def test_oscillatory_lorentz():
    v, e = integrate_oscillatory(lambda p: 1.0 / (1.0 + p * p), 1.0)
    assert abs(v - math.pi / (2.0 * math.e)) <= max(e, 1e-9)


def test_oscillatory_below_abs_tol_is_zeroish():
    # true value (pi/2)e^{-50} ~ 3e-22 sits far under abs_tol; anything
    # inside the reported error budget is acceptable
    v, e = integrate_oscillatory(lambda p: 1.0 / (1.0 + p * p), 50.0)
    assert abs(v) <= max(e, 1e-9)


def test_oscillatory_singular_envelope():
    # int_0^inf p^{-1/2} cos(p)/(1+p) dp, frozen from a 50-digit
    # mpmath evaluation of the alternating half-period series
    want = 1.3056085090234678
    v, e = integrate_oscillatory(lambda p: p ** -0.5 / (1.0 + p), 1.0,
                                 singularity_power=-0.5)
    assert abs(v - want) <= max(e, 1e-7)


def test_oscillatory_sin_kernel():
    v, e = integrate_oscillatory(lambda p: np.exp(-p * p / 2.0), 1.0,
                                 kernel="sin")
    want, _ = si.quad(lambda p: math.sin(p) * math.exp(-p * p / 2.0),
                      0.0, 30.0, limit=200)
    assert abs(v - want) <= max(e, 1e-9)


def test_oscillatory_omega_sweep_property():
    rng = np.random.default_rng(314)
    for omega in rng.uniform(0.3, 12.0, 6):
        v, e = integrate_oscillatory(lambda p: np.exp(-p), float(omega))
        want = 1.0 / (1.0 + omega * omega)
        assert abs(v - want) <= max(e, 1e-9), omega


def test_oscillatory_rejects_nonintegrable_power():
    with pytest.raises(NonIntegrable):
        integrate_oscillatory(lambda p: p ** -1.2, 1.0, singularity_power=-1.2)


def test_oscillatory_rejects_growing_envelope():
    with pytest.raises((NonDecaying, NonIntegrable)):
        integrate_oscillatory(lambda p: np.exp(0.5 * p), 1.0)


def test_oscillatory_rejects_bad_kernel():
    with pytest.raises(ValueError):
        integrate_oscillatory(lambda p: np.exp(-p), 1.0, kernel="tan")


# ----------------------------------------------------------------- bisect

def test_root_bisect_cosine():
    r = root_bisect(math.cos, 0.0, 2.0)
    assert abs(r - math.pi / 2.0) < 1e-11


def test_root_bisect_endpoint_hit():
    assert root_bisect(lambda x: x, 0.0, 1.0) == 0.0
    assert root_bisect(lambda x: x - 1.0, 0.0, 1.0) == 1.0


def test_root_bisect_no_bracket():
    with pytest.raises(NoBracket):
        root_bisect(lambda x: x * x + 1.0, -1.0, 1.0)


def test_root_bisect_bad_interval():
    with pytest.raises(ValueError):
        root_bisect(math.cos, 2.0, 0.0)


def test_root_bisect_monotone_decreasing():
    # the spectral condition is strictly decreasing; same orientation here
    g = lambda x: 1.0 - x * x
    r = root_bisect(g, 0.5, 3.0, tol=1e-13)
    assert abs(r - 1.0) < 1e-12
