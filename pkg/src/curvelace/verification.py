"""Self-checks run by ``curvelace verify``.

Each suite compares two independent routes to the same quantity (closed
form vs quadrature, finite-difference curvature vs known values, two
parametrisations of one metric) and reports pass/fail per check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .knots import builtin_table, min_tube_length, recommended_length, ropelength
from .numerics import integrate
from .pattern import Gauge, compile_pattern, round_counts
from .surfaces import (
    TWO_PI,
    Bour,
    Catenoid,
    Enneper,
    Helicoid,
    MobiusRuled,
    Richmond,
    Sphere,
    Surface,
    min_circumference_radius,
)

# Published Enneper (n=2) stitch counts per round for W = 0.5 cm and three
# stitch heights, with the printed totals.
REFERENCE_ENNEPER_TABLE: dict[float, tuple[tuple[int, ...], int]] = {
    0.4: ((5, 11, 18, 25, 34, 43, 53, 63, 74, 85, 96, 107, 119, 131, 143, 155, 167, 180), 1512),
    0.45: ((6, 12, 20, 29, 39, 49, 61, 73, 85, 97, 110, 123, 136, 150, 164, 178, 192), 1525),
    0.5: ((6, 14, 23, 33, 44, 56, 69, 82, 96, 110, 124, 139, 154, 169, 184, 200), 1504),
}
REFERENCE_WIDTH = 0.5
SCALE_SCAN = (1.5, 2.6, 0.005)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.suite}: {self.name} ({self.detail})"


@dataclass(frozen=True)
class ScaleFit:
    height: float
    scale: float
    counts: tuple[int, ...]
    l1: int

    @property
    def total(self) -> int:
        return sum(self.counts)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def _check(suite: str, name: str, worst: float, limit: float, label: str = "max err") -> Check:
    return Check(suite, name, worst <= limit, f"{label} {worst:.2e} <= {limit:.0e}")


# ---------------------------------------------------------------------------
# Table fit


def fit_scale(height: float, width: float = REFERENCE_WIDTH,
              reference: Sequence[int] | None = None,
              scan: tuple[float, float, float] = SCALE_SCAN) -> ScaleFit:
    """Brute-force scan of the Enneper scale minimising the L1 count mismatch.

    Ties keep the smallest scale.
    """
    ref = REFERENCE_ENNEPER_TABLE[height][0] if reference is None else tuple(reference)
    gauge = Gauge(width, height)
    lo, hi, step = scan
    steps = int(round((hi - lo) / step))
    best: ScaleFit | None = None
    for i in range(steps + 1):
        s = round(lo + i * step, 10)
        counts = tuple(round_counts(Enneper(2, scale=s), gauge, len(ref)))
        l1 = sum(abs(a - b) for a, b in zip(counts, ref))
        if best is None or l1 < best.l1:
            best = ScaleFit(height, s, counts, l1)
    assert best is not None
    return best


def suite_table_fit() -> list[Check]:
    out = []
    for h, (ref, printed) in REFERENCE_ENNEPER_TABLE.items():
        fit = fit_scale(h)
        diffs = [abs(a - b) for a, b in zip(fit.counts, ref)]
        within1 = sum(d <= 1 for d in diffs) / len(diffs)
        total_err = abs(fit.total - printed) / printed
        ok = within1 >= 0.8 and max(diffs) <= 3 and total_err <= 0.015
        out.append(Check(
            "table", f"H={h:g} fit",
            ok,
            f"scale {fit.scale:.3f}, {within1:.0%} within 1, max diff {max(diffs)}, "
            f"total {fit.total} vs {printed}",
        ))
    return out


# ---------------------------------------------------------------------------
# closed forms vs quadrature


def _closed_vs_quad(surface: Surface, rs: Iterable[float], anchor: float) -> tuple[float, float]:
    worst_c = worst_r = 0.0
    for r in rs:
        worst_c = max(worst_c, _rel(surface.circumference(r), surface.circumference_quadrature(r)))
        worst_r = max(worst_r, _rel(surface.radial_arclength(anchor, r),
                                    surface.radial_arclength_quadrature(anchor, r)))
    return worst_c, worst_r


def suite_closed_forms() -> list[Check]:
    out = []
    rs = np.linspace(0.1, 2.5, 20)
    for n in (2, 3, 6):
        c, r = _closed_vs_quad(Enneper(n), rs, 0.0)
        out.append(_check("closed-form", f"enneper n={n} circumference", c, 1e-8))
        out.append(_check("closed-form", f"enneper n={n} radius", r, 1e-8))
    for n in (1, 2):
        s = Richmond(n, r_min=0.2, r_max=2.5)
        c, r = _closed_vs_quad(s, np.linspace(0.25, 2.5, 20), 0.2)
        out.append(_check("closed-form", f"richmond n={n} circumference", c, 1e-8))
        out.append(_check("closed-form", f"richmond n={n} radius", r, 1e-8))
    c, r = _closed_vs_quad(Bour(), np.linspace(0.05, 1.0, 20), 0.0)
    out.append(_check("closed-form", "bour circumference", c, 1e-8))
    out.append(_check("closed-form", "bour radius", r, 1e-8))
    sph = Sphere(4.0)
    c, r = _closed_vs_quad(sph, np.linspace(0.1, 4.0 * math.pi - 0.1, 20), 0.0)
    out.append(_check("closed-form", "sphere circumference", c, 1e-8))
    return out


# ---------------------------------------------------------------------------
# curvature


def _grid(lo: float, hi: float, t0: float, t1: float, n: int = 10):
    rs = np.linspace(lo, hi, n)
    ts = t0 + (t1 - t0) * (np.arange(n) + 0.5) / n
    return [(float(r), float(t)) for r in rs for t in ts]


MINIMAL_SAMPLES: tuple[tuple[Surface, tuple[float, float]], ...] = (
    (Enneper(2), (0.1, 1.2)),
    (Enneper(3), (0.1, 1.0)),
    (Richmond(1), (0.4, 1.8)),
    (Bour(), (0.1, 0.9)),
    (Catenoid(1.0), (-2.0, 2.0)),
    (Helicoid(1.0), (0.1, 2.0)),
)


def suite_curvature() -> list[Check]:
    out = []
    for surface, (lo, hi) in MINIMAL_SAMPLES:
        t0, t1 = surface.theta_domain()
        worst_h = worst_k = -math.inf
        for r, t in _grid(lo, hi, t0, t1):
            k1, k2 = surface.principal_curvatures(r, t)
            h = surface.mean_curvature(r, t)
            worst_h = max(worst_h, abs(h) / max(abs(k1), abs(k2), 1e-300))
            worst_k = max(worst_k, surface.gaussian_curvature(r, t))
        name = surface.family + (f" n={surface.n}" if hasattr(surface, "n") else "")
        out.append(_check("curvature", f"{name} |H|/max|k|", worst_h, 1e-3, "max"))
        out.append(Check("curvature", f"{name} K <= 0", worst_k <= 1e-6, f"max K {worst_k:.2e}"))
    for S in (1.0, 4.0):
        sph = Sphere(S)
        worst = max(_rel(sph.gaussian_curvature(r, t), 1 / S**2)
                    for r, t in _grid(0.2 * S, 2.9 * S, 0.0, TWO_PI))
        out.append(_check("curvature", f"sphere S={S:g} K=1/S^2", worst, 1e-4, "max rel"))
    return out


# ---------------------------------------------------------------------------
# isometry and Richmond start


def suite_isometry() -> list[Check]:
    cat, hel = Catenoid(1.0, r_max=3.0), Helicoid(1.0, r_max=3.0)
    worst = 0.0
    for r in np.linspace(0.0, 3.0, 30):
        exact = TWO_PI * math.sqrt(r * r + 1.0)
        worst = max(worst, _rel(cat.circumference(r), exact), _rel(hel.row_length(r), exact))
    return [_check("isometry", "catenoid rounds = helicoid rows", worst, 1e-10, "max rel")]


def suite_richmond() -> list[Check]:
    out = []
    for n in (1, 2, 3):
        r_star = min_circumference_radius(Richmond(n, r_min=0.2, r_max=2.0))
        exact = (1.0 / (2 * n + 1)) ** (1.0 / (2 * n + 2))
        out.append(_check("richmond", f"n={n} shortest round r*", abs(r_star - exact), 1e-6))
    return out


# ---------------------------------------------------------------------------
# Moebius band


def sector_deviation(surface: MobiusRuled, gauge: Gauge, rounds: int | None = None,
                     sectors: int = 12) -> float:
    """Largest gap between stitches counted in a theta-sector and the sector's arc share."""
    pattern = compile_pattern(surface, gauge, rounds)
    worst = 0.0
    edges = [TWO_PI * k / sectors for k in range(sectors + 1)]
    for plan in pattern.rounds[1:]:
        w = plan.r_param
        total = surface.boundary_length(w) / surface.scale
        shares = [
            sum(1 for m in plan.theta_mids if a <= m < b) for a, b in zip(edges, edges[1:])
        ]
        for k, (a, b) in enumerate(zip(edges, edges[1:])):
            arc = integrate(lambda t: surface.speed(w, t), a, b, 1e-12).value
            worst = max(worst, abs(shares[k] - plan.stitches * arc / total))
    return worst


def suite_moebius() -> list[Check]:
    band = MobiusRuled(0.6, scale=5.0)
    worst = max(abs(band.boundary_length(w) - band.boundary_length_halves(w)) / band.boundary_length(w)
                for w in (0.1, 0.3, 0.5, 0.6))
    out = [_check("moebius", "boundary length two routes", worst, 1e-10, "max rel")]
    dev = sector_deviation(band, Gauge(0.5, 0.5))
    out.append(Check("moebius", "30 degree sector allocation", dev < 1.0, f"max dev {dev:.3f} < 1"))
    return out


# ---------------------------------------------------------------------------
# knots


def suite_knots() -> list[Check]:
    table = builtin_table()
    t = table["3_1"]
    checks = [
        ("ropelength(30.48, 1.27) = 24", abs(ropelength(30.48, 1.27) - 24) < 1e-12),
        ("trefoil 0.8 cm minimum = 13.096", abs(min_tube_length(t, 0.8) - 13.096) < 1e-12),
        ("4_1 recommendation = trefoil rule + 10",
         abs(recommended_length(table["4_1"], 0.8) - recommended_length(t, 0.8) - 10) < 1e-12),
    ]
    return [Check("knots", name, ok, "exact") for name, ok in checks]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "closed-form": suite_closed_forms,
    "curvature": suite_curvature,
    "isometry": suite_isometry,
    "richmond": suite_richmond,
    "moebius": suite_moebius,
    "knots": suite_knots,
    "table": suite_table_fit,
}


def run_all(names: Iterable[str] | None = None) -> list[Check]:
    results: list[Check] = []
    for name in names or SUITES:
        results.extend(SUITES[name]())
    return results
