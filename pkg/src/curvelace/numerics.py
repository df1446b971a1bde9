"""Scalar numerical kernel: adaptive quadrature, bracketed roots, golden-section
minimisation and central differences.

Everything here is a pure function of its arguments, so it is safe to call
from several threads at once.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

from .errors import BracketError, QuadratureError

Func = Callable[[float], float]

DEFAULT_QUAD_TOL = 1e-10
DEFAULT_QUAD_RTOL = 1e-13
DEFAULT_ROOT_TOL = 1e-12
DEFAULT_MIN_TOL = 1e-10
MAX_EVALUATIONS = 1_000_000

# Gauss-Kronrod 7/15 abscissae on [-1, 1] (positive half, descending) and
# weights. Odd indices of the Kronrod nodes are the 7-point Gauss nodes.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)
_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def __float__(self) -> float:
        return self.value


def _eval(f: Func, x: float) -> float:
    y = float(f(x))
    if not math.isfinite(y):
        raise ValueError(f"integrand is not finite at x={x!r}")
    return y


def _kronrod_panel(f: Func, a: float, b: float) -> tuple[float, float]:
    """One G7/K15 panel: (Kronrod estimate, |Kronrod - Gauss|)."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = _eval(f, center)
    kronrod = fc * _WGK[7]
    gauss = fc * _WG[3]
    for j in range(7):
        dx = half * _XGK[j]
        pair = _eval(f, center - dx) + _eval(f, center + dx)
        kronrod += _WGK[j] * pair
        if j % 2 == 1:
            gauss += _WG[j // 2] * pair
    return kronrod * half, abs((kronrod - gauss) * half)


def integrate(
    f: Func,
    a: float,
    b: float,
    tol: float = DEFAULT_QUAD_TOL,
    *,
    rtol: float = DEFAULT_QUAD_RTOL,
    max_evaluations: int = MAX_EVALUATIONS,
) -> QuadratureResult:
    """Integrate ``f`` over ``[a, b]`` by globally adaptive bisection.

    Each panel is evaluated with the 15-point Gauss-Kronrod rule, and the
    difference to the embedded 7-point Gauss rule serves as the panel error.
    The panel with the largest error is halved until the summed error drops
    below ``max(tol, rtol * |value|)``.

    Raises :class:`QuadratureError` when more than ``max_evaluations``
    integrand calls would be needed. Reversed limits flip the sign.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("integration limits must be finite")
    if a > b:
        res = integrate(f, b, a, tol, rtol=rtol, max_evaluations=max_evaluations)
        return QuadratureResult(-res.value, res.error_estimate, res.evaluations)

    value, err = _kronrod_panel(f, a, b)
    evaluations = 15
    # heap entries: (-error, insertion order, lo, hi, value, error)
    heap = [(-err, 0, a, b, value, err)]
    counter = 1
    total, total_err = value, err
    while total_err > max(tol, rtol * abs(total)):
        if evaluations + 30 > max_evaluations:
            raise QuadratureError(
                f"quadrature budget exceeded ({evaluations} evaluations, "
                f"error estimate {total_err:.3e})"
            )
        _, _, lo, hi, v, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # panel cannot be split further in floating point
            heapq.heappush(heap, (0.0, counter, lo, hi, v, e))
            counter += 1
            if all(entry[0] == 0.0 for entry in heap):
                break
            continue
        v1, e1 = _kronrod_panel(f, lo, mid)
        v2, e2 = _kronrod_panel(f, mid, hi)
        evaluations += 30
        total += v1 + v2 - v
        total_err += e1 + e2 - e
        heapq.heappush(heap, (-e1, counter, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, counter + 1, mid, hi, v2, e2))
        counter += 2

    # re-sum to shed the drift of the running updates
    total = math.fsum(entry[4] for entry in heap)
    total_err = math.fsum(entry[5] for entry in heap)
    return QuadratureResult(total, total_err, evaluations)


def find_root(f: Func, lo: float, hi: float, tol: float = DEFAULT_ROOT_TOL) -> float:
    """Brent's bracketed root finder (bisection, secant and inverse quadratic).

    Requires ``f(lo) * f(hi) <= 0``. Returns a point whose bracket has
    shrunk to about ``tol`` (plus a few ulps of the root), or an exact zero.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.copysign(1.0, fa) == math.copysign(1.0, fb):
        raise BracketError(
            f"root not bracketed: f({a!r})={fa!r}, f({b!r})={fb!r}"
        )

    c, fc = a, fa
    d = e = b - a
    eps = 2.220446049250313e-16
    for _ in range(500):
        if (fb > 0) == (fc > 0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * eps * abs(b) + 0.5 * tol
        m = 0.5 * (c - b)
        if abs(m) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            else:
                p = -p
            if 2.0 * p < min(3.0 * m * q - abs(tol1 * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = m
        else:
            d = e = m
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, m)
        fb = f(b)
    return b


def minimize_scalar(f: Func, lo: float, hi: float, tol: float = DEFAULT_MIN_TOL) -> float:
    """Golden-section search for the minimiser of a unimodal ``f`` on ``[lo, hi]``.

    The bracket is shrunk until its width is at most ``tol``; the midpoint of
    the final bracket is returned. A minimum on the boundary is found by the
    bracket collapsing onto that end.
    """
    if not lo < hi:
        raise BracketError(f"empty bracket [{lo!r}, {hi!r}]")
    if not tol > 0:
        raise ValueError("tol must be positive")
    a, b = float(lo), float(hi)
    x1 = b - _PHI * (b - a)
    x2 = a + _PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _PHI * (b - a)
            f2 = f(x2)
    return 0.5 * (a + b)


def differentiate(f: Func, x: float, order: int = 1, step: float | None = None) -> float:
    """Second-order accurate central difference of ``f`` at ``x``.

    Default steps are 1e-6 for the first derivative and 1e-4 for the second.
    """
    if order == 1:
        h = 1e-6 if step is None else step
        return (f(x + h) - f(x - h)) / (2.0 * h)
    if order == 2:
        h = 1e-4 if step is None else step
        return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
    raise ValueError("order must be 1 or 2")
