import math

import numpy as np
import pytest
from scipy import integrate as sp_integrate
from scipy import optimize as sp_optimize

from curvelace.errors import BracketError, QuadratureError
from curvelace.numerics import differentiate, find_root, integrate, minimize_scalar


@pytest.mark.parametrize(
    "f, a, b, exact",
    [
        (math.sin, 0.0, math.pi, 2.0),
        (lambda x: x**2, 0.0, 3.0, 9.0),
        (math.exp, -1.0, 2.0, math.e**2 - math.exp(-1)),
        (lambda x: 1.0 / (1.0 + x * x), -50.0, 50.0, 2 * math.atan(50.0)),
        (math.sqrt, 0.0, 1.0, 2.0 / 3.0),  # endpoint singularity in the derivative
    ],
)
def test_integrate_known_values(f, a, b, exact):
    res = integrate(f, a, b, 1e-12)
    assert res.value == pytest.approx(exact, rel=1e-11, abs=1e-11)
    assert res.evaluations % 15 == 0


def test_integrate_reversed_limits_and_empty_interval():
    assert integrate(math.cos, 1.0, 0.0).value == pytest.approx(-math.sin(1.0), rel=1e-13)
    assert integrate(math.cos, 2.0, 2.0).value == 0.0


def test_integrate_matches_scipy_on_oscillatory():
    f = lambda x: math.cos(20 * x) * math.exp(-x)
    ref, _ = sp_integrate.quad(f, 0.0, 5.0, epsabs=1e-14, epsrel=1e-14, limit=500)
    assert integrate(f, 0.0, 5.0, 1e-13).value == pytest.approx(ref, abs=1e-12)


def test_integrate_budget_exceeded():
    with pytest.raises(QuadratureError, match="quadrature budget exceeded"):
        integrate(lambda x: math.sin(1.0 / x) if x else 0.0, 0.0, 1.0, 1e-15, rtol=0.0,
                  max_evaluations=3000)


def test_integrate_rejects_nonfinite():
    with pytest.raises(ValueError):
        integrate(lambda x: float("nan"), 0.0, 1.0)
    with pytest.raises(ValueError):
        integrate(math.sin, 0.0, math.inf)


def test_find_root_examples():
    # r + r^3/3 = 0.5 (bisection oracle: 0.4662205...)
    root = find_root(lambda r: r + r**3 / 3 - 0.5, 0.0, 1.0)
    assert root == pytest.approx(0.46622052, abs=1e-8)
    assert root == pytest.approx(sp_optimize.brentq(lambda r: r + r**3 / 3 - 0.5, 0, 1, xtol=1e-15), abs=1e-12)
    assert find_root(lambda x: x * x - 2, 0.0, 2.0) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert find_root(lambda x: x, 0.0, 1.0) == 0.0


def test_find_root_requires_bracket():
    with pytest.raises(BracketError, match="root not bracketed"):
        find_root(lambda x: x * x + 1, -1.0, 1.0)


def test_minimize_scalar():
    assert minimize_scalar(lambda x: (x - 0.3) ** 2, 0.0, 1.0) == pytest.approx(0.3, abs=1e-8)
    # boundary minimum
    assert minimize_scalar(lambda x: x, 0.0, 1.0) == pytest.approx(0.0, abs=1e-9)
    # Richmond n=1 circumference 1/r + r^3 has its minimum at 3^(-1/4)
    assert minimize_scalar(lambda r: 1 / r + r**3, 0.2, 2.0, 1e-12) == pytest.approx(3 ** -0.25, abs=1e-7)
    with pytest.raises(BracketError, match="empty bracket"):
        minimize_scalar(abs, 1.0, 1.0)


def test_minimize_matches_scipy_golden():
    f = lambda x: math.cosh(x - 1.1) + 0.1 * x
    ref = sp_optimize.minimize_scalar(f, bounds=(0, 3), method="bounded", options={"xatol": 1e-12}).x
    assert minimize_scalar(f, 0.0, 3.0, 1e-11) == pytest.approx(ref, abs=1e-6)


def test_differentiate():
    for x in np.linspace(-2, 2, 9):
        assert differentiate(math.sin, x) == pytest.approx(math.cos(x), abs=1e-9)
        assert differentiate(math.sin, x, order=2) == pytest.approx(-math.sin(x), abs=1e-6)
    with pytest.raises(ValueError):
        differentiate(math.sin, 0.0, order=3)
