"""Surface catalog.

Every family is a frozen dataclass parametrised by ``(r, theta)`` where ``r``
is the radial parameter (not in general the intrinsic radius) and ``theta``
the angle around the starting point. Lengths returned by the public methods
are in cm: the parametrisation is multiplied by ``scale`` (cm per parameter
unit).

Arc-length profiles use closed forms where they are known and fall back to
adaptive quadrature of the first fundamental form otherwise. The
``*_quadrature`` methods always integrate numerically and are kept as
independent oracles for the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, fields
from typing import Any, ClassVar, NamedTuple

import numpy as np

from . import numerics
from .errors import (
    DegenerateMetricError,
    DomainError,
    NoEmbeddingError,
    NotApplicableError,
)

TWO_PI = 2.0 * math.pi
_DOMAIN_SLACK = 1e-12
FD_STEP_FIRST = 1e-5
FD_STEP_SECOND = 1e-4


class SurfacePoint(NamedTuple):
    x: float
    y: float
    z: float


class MetricSample(NamedTuple):
    E: float
    F: float
    G: float


@dataclass(frozen=True)
class Surface:
    """Base class for the catalog; subclasses fill in the parametrisation."""

    scale: float = field(default=1.0, kw_only=True)

    family: ClassVar[str] = ""
    #: theta range swept by one closed round
    theta_span: ClassVar[float] = TWO_PI
    embedded: ClassVar[bool] = True
    #: True when the theta-curves close up (mesh seam gets welded)
    closed_theta: ClassVar[bool] = True

    def __post_init__(self) -> None:
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise DomainError("scale must be a positive finite number")
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, float) and not math.isfinite(value):
                raise DomainError(f"{f.name} must be finite")

    # -- parametrisation hooks ------------------------------------------
    def r_domain(self) -> tuple[float, float]:
        return (0.0, math.inf)

    def theta_domain(self) -> tuple[float, float]:
        return (0.0, self.theta_span)

    def _xyz(self, r, t):
        raise NoEmbeddingError(f"no embedding available for {self.family}")

    def _tangents(self, r, t):
        """Analytic (d/dr, d/dtheta) of ``_xyz``, unscaled."""
        raise NoEmbeddingError(f"no embedding available for {self.family}")

    def _circumference(self, r: float) -> float | None:
        return None

    def _radial(self, r0: float, r1: float) -> float | None:
        return None

    def _radial_inverse(self, anchor: float, length: float, direction: int) -> float | None:
        return None

    def default_anchor(self) -> float:
        return max(0.0, self.r_domain()[0])

    # -- checks -----------------------------------------------------------
    def _check_r(self, r: float) -> None:
        lo, hi = self.r_domain()
        if not (math.isfinite(r) and lo - _DOMAIN_SLACK <= r <= hi + _DOMAIN_SLACK):
            raise DomainError(f"parameter out of domain: r={r!r} not in [{lo}, {hi}]")

    def _check_point(self, r: float, theta: float) -> None:
        self._check_r(r)
        t0, t1 = self.theta_domain()
        if not (math.isfinite(theta) and t0 - _DOMAIN_SLACK <= theta <= t1 + _DOMAIN_SLACK):
            raise DomainError(
                f"parameter out of domain: theta={theta!r} not in [{t0}, {t1}]"
            )

    # -- geometry ---------------------------------------------------------
    def point(self, r: float, theta: float) -> SurfacePoint:
        if not self.embedded:
            raise NoEmbeddingError(f"no embedding available for {self.family}")
        self._check_point(r, theta)
        x, y, z = self._xyz(r, theta)
        s = self.scale
        return SurfacePoint(float(x) * s, float(y) * s, float(z) * s)

    def points(self, r, theta) -> np.ndarray:
        """Vectorised, unchecked evaluation; returns an array of shape (..., 3) in cm."""
        if not self.embedded:
            raise NoEmbeddingError(f"no embedding available for {self.family}")
        r, theta = np.broadcast_arrays(np.asarray(r, float), np.asarray(theta, float))
        x, y, z = self._xyz(r, theta)
        return np.stack(np.broadcast_arrays(x, y, z), axis=-1) * self.scale

    def _metric_unscaled(self, r: float, theta: float) -> MetricSample:
        sr, st = self._tangents(r, theta)
        E = sum(float(a) ** 2 for a in sr)
        G = sum(float(b) ** 2 for b in st)
        F = sum(float(a) * float(b) for a, b in zip(sr, st))
        return MetricSample(E, F, G)

    def metric(self, r: float, theta: float) -> MetricSample:
        self._check_point(r, theta)
        E, F, G = self._metric_unscaled(r, theta)
        s2 = self.scale**2
        return MetricSample(E * s2, F * s2, G * s2)

    def circumference(self, r: float) -> float:
        """Length in cm of the round at parameter ``r``."""
        self._check_r(r)
        closed = self._circumference(r)
        if closed is None:
            return self.circumference_quadrature(r)
        return closed * self.scale

    def circumference_quadrature(self, r: float, tol: float = 1e-12) -> float:
        self._check_r(r)
        res = numerics.integrate(
            lambda t: math.sqrt(self._metric_unscaled(r, t).G), 0.0, self.theta_span, tol
        )
        return res.value * self.scale

    def radial_arclength(self, r0: float, r1: float) -> float:
        """Intrinsic distance in cm between the rounds at ``r0`` and ``r1``."""
        self._check_r(r0)
        self._check_r(r1)
        lo, hi = min(r0, r1), max(r0, r1)
        closed = self._radial(lo, hi)
        if closed is None:
            return self.radial_arclength_quadrature(lo, hi)
        return closed * self.scale

    def radial_arclength_quadrature(
        self, r0: float, r1: float, theta: float = 0.0, tol: float = 1e-12
    ) -> float:
        self._check_r(r0)
        self._check_r(r1)
        lo, hi = min(r0, r1), max(r0, r1)
        res = numerics.integrate(
            lambda u: math.sqrt(self._metric_unscaled(u, theta).E), lo, hi, tol
        )
        return res.value * self.scale

    def radius_limit(self, anchor: float | None = None, direction: int = 1) -> float:
        """Largest intrinsic radius (cm) reachable from ``anchor`` in ``direction``."""
        anchor = self.default_anchor() if anchor is None else anchor
        lo, hi = self.r_domain()
        end = hi if direction > 0 else lo
        if math.isinf(end):
            return math.inf
        return self.radial_arclength(anchor, end)

    def invert_radius(
        self, R: float, anchor: float | None = None, direction: int = 1
    ) -> float:
        """Parameter ``r`` whose intrinsic distance from ``anchor`` equals ``R`` cm."""
        if not (math.isfinite(R) and R >= 0):
            raise DomainError(f"radius must be finite and non-negative, got {R!r}")
        anchor = self.default_anchor() if anchor is None else anchor
        self._check_r(anchor)
        direction = 1 if direction >= 0 else -1
        if R == 0:
            return anchor
        limit = self.radius_limit(anchor, direction)
        if R > limit * (1 + 1e-12):
            raise DomainError(
                f"radius unreachable: R={R!r} cm exceeds {limit!r} cm for {self.family}"
            )
        target = R / self.scale
        quick = self._radial_inverse(anchor, target, direction)
        if quick is not None:
            return quick

        def excess(r: float) -> float:
            return self.radial_arclength(anchor, r) / self.scale - target

        lo, hi = self.r_domain()
        end = hi if direction > 0 else lo
        if math.isinf(end):
            # the parameter never runs faster than the intrinsic radius for
            # the open families, so anchor + target brackets the root
            step = max(target, 1e-3)
            end = anchor + direction * step
            while excess(end) < 0:
                step *= 2.0
                end = anchor + direction * step
        else:
            end = min(max(end, lo), hi)
            if excess(end) < 0:
                return end
        return numerics.find_root(excess, min(anchor, end), max(anchor, end))

    # -- curvature --------------------------------------------------------
    def _fd_frame(self, r: float, t: float):
        h1, h2 = FD_STEP_FIRST, FD_STEP_SECOND

        def P(u: float, v: float) -> np.ndarray:
            return np.array(self._xyz(u, v), dtype=float)

        sr = (P(r + h1, t) - P(r - h1, t)) / (2 * h1)
        st = (P(r, t + h1) - P(r, t - h1)) / (2 * h1)
        c = P(r, t)
        srr = (P(r + h2, t) - 2 * c + P(r - h2, t)) / h2**2
        stt = (P(r, t + h2) - 2 * c + P(r, t - h2)) / h2**2
        srt = (
            P(r + h2, t + h2) - P(r + h2, t - h2) - P(r - h2, t + h2) + P(r - h2, t - h2)
        ) / (4 * h2**2)
        return sr, st, srr, srt, stt

    def _fundamental_forms(self, r: float, theta: float):
        if not self.embedded:
            raise NoEmbeddingError(f"no embedding available for {self.family}")
        self._check_point(r, theta)
        sr, st, srr, srt, stt = self._fd_frame(r, theta)
        E, F, G = sr @ sr, sr @ st, st @ st
        det = E * G - F * F
        if det < 1e-12:
            raise DegenerateMetricError(
                f"degenerate metric at r={r!r}, theta={theta!r} (EG-F^2={det:.3e})"
            )
        normal = np.cross(sr, st)
        normal /= np.linalg.norm(normal)
        e, f, g = srr @ normal, srt @ normal, stt @ normal
        return E, F, G, e, f, g, det

    def mean_curvature(self, r: float, theta: float) -> float:
        """Half-sum of the principal curvatures (1/cm), normal sr x st."""
        E, F, G, e, f, g, det = self._fundamental_forms(r, theta)
        return float((e * G - 2 * f * F + g * E) / (2 * det)) / self.scale

    def gaussian_curvature(self, r: float, theta: float) -> float:
        E, F, G, e, f, g, det = self._fundamental_forms(r, theta)
        return float((e * g - f * f) / det) / self.scale**2

    def principal_curvatures(self, r: float, theta: float) -> tuple[float, float]:
        E, F, G, e, f, g, det = self._fundamental_forms(r, theta)
        H = (e * G - 2 * f * F + g * E) / (2 * det)
        K = (e * g - f * f) / det
        root = math.sqrt(max(H * H - K, 0.0))
        return float(H + root) / self.scale, float(H - root) / self.scale

    # -- misc ---------------------------------------------------------------
    def params(self) -> dict[str, Any]:
        out = {"family": self.family}
        out.update(asdict(self))
        return out


# ---------------------------------------------------------------------------
# constant curvature


@dataclass(frozen=True)
class Disc(Surface):
    family: ClassVar[str] = "disc"

    def _xyz(self, r, t):
        return r * np.cos(t), r * np.sin(t), 0 * (r * t)

    def _tangents(self, r, t):
        return (math.cos(t), math.sin(t), 0.0), (-r * math.sin(t), r * math.cos(t), 0.0)

    def _circumference(self, r):
        return TWO_PI * r

    def _radial(self, r0, r1):
        return r1 - r0

    def _radial_inverse(self, anchor, length, direction):
        return anchor + direction * length


@dataclass(frozen=True)
class Sphere(Surface):
    """Round sphere of radius ``S``; ``r`` is the intrinsic distance from the pole."""

    S: float = 1.0
    family: ClassVar[str] = "sphere"

    def __post_init__(self):
        super().__post_init__()
        if not self.S > 0:
            raise DomainError("sphere radius S must be positive")

    def r_domain(self):
        return (0.0, math.pi * self.S)

    def _xyz(self, r, t):
        S = self.S
        rho = S * np.sin(r / S)
        return rho * np.cos(t), rho * np.sin(t), S * np.cos(r / S)

    def _tangents(self, r, t):
        S = self.S
        rho = S * math.sin(r / S)
        drho = math.cos(r / S)
        return (
            (drho * math.cos(t), drho * math.sin(t), -math.sin(r / S)),
            (-rho * math.sin(t), rho * math.cos(t), 0.0),
        )

    def _circumference(self, r):
        return TWO_PI * self.S * math.sin(r / self.S)

    def _radial(self, r0, r1):
        return r1 - r0

    def _radial_inverse(self, anchor, length, direction):
        return anchor + direction * length


@dataclass(frozen=True)
class Hyperbolic(Surface):
    """Hyperbolic plane of curvature ``-1/S**2``; intrinsic profile only."""

    S: float = 1.0
    family: ClassVar[str] = "hyperbolic"
    embedded: ClassVar[bool] = False

    def __post_init__(self):
        super().__post_init__()
        if not self.S > 0:
            raise DomainError("hyperbolic radius S must be positive")

    def _metric_unscaled(self, r, theta):
        # geodesic polar coordinates; available even without an embedding
        return MetricSample(1.0, 0.0, (self.S * math.sinh(r / self.S)) ** 2)

    def _circumference(self, r):
        return TWO_PI * self.S * math.sinh(r / self.S)

    def _radial(self, r0, r1):
        return r1 - r0

    def _radial_inverse(self, anchor, length, direction):
        return anchor + direction * length


# ---------------------------------------------------------------------------
# minimal surfaces


@dataclass(frozen=True)
class Enneper(Surface):
    """Enneper surface with ``n``-fold rotational symmetry (n >= 2)."""

    n: int = 2
    family: ClassVar[str] = "enneper"

    def __post_init__(self):
        super().__post_init__()
        if not (isinstance(self.n, int) and self.n >= 2):
            raise DomainError("Enneper order n must be an integer >= 2 (n=1 is the disc)")

    def _xyz(self, r, t):
        n = self.n
        m = 2 * n - 1
        x = r * np.cos(t) - r**m / m * np.cos(m * t)
        y = r * np.sin(t) + r**m / m * np.sin(m * t)
        z = 2 * r**n / n * np.cos(n * t)
        return x, y, z

    def _tangents(self, r, t):
        n = self.n
        m = 2 * n - 1
        rm1 = r ** (m - 1)
        d_r = (
            math.cos(t) - rm1 * math.cos(m * t),
            math.sin(t) + rm1 * math.sin(m * t),
            2 * r ** (n - 1) * math.cos(n * t),
        )
        d_t = (
            -r * math.sin(t) + r**m * math.sin(m * t),
            r * math.cos(t) + r**m * math.cos(m * t),
            -2 * r**n * math.sin(n * t),
        )
        return d_r, d_t

    def _circumference(self, r):
        return TWO_PI * (r + r ** (2 * self.n - 1))

    def _radial(self, r0, r1):
        m = 2 * self.n - 1

        def R(r):
            return r + r**m / m

        return R(r1) - R(r0)


@dataclass(frozen=True)
class Richmond(Surface):
    """Richmond (planar Enneper) surface restricted to ``r_min <= r <= r_max``."""

    n: int = 1
    r_min: float = 0.3
    r_max: float = 2.0
    family: ClassVar[str] = "richmond"

    def __post_init__(self):
        super().__post_init__()
        if not (isinstance(self.n, int) and self.n >= 1):
            raise DomainError("Richmond order n must be an integer >= 1")
        if not (0 < self.r_min <= self.r_max):
            raise DomainError("Richmond needs 0 < r_min <= r_max")

    def r_domain(self):
        return (self.r_min, self.r_max)

    def _xyz(self, r, t):
        n = self.n
        m = 2 * n + 1
        x = -np.cos(t) / r - r**m / m * np.cos(m * t)
        y = -np.sin(t) / r - r**m / m * np.sin(m * t)
        z = 2 * r**n / n * np.cos(n * t)
        return x, y, z

    def _tangents(self, r, t):
        n = self.n
        m = 2 * n + 1
        d_r = (
            math.cos(t) / r**2 - r ** (m - 1) * math.cos(m * t),
            math.sin(t) / r**2 - r ** (m - 1) * math.sin(m * t),
            2 * r ** (n - 1) * math.cos(n * t),
        )
        d_t = (
            math.sin(t) / r + r**m * math.sin(m * t),
            -math.cos(t) / r - r**m * math.cos(m * t),
            -2 * r**n * math.sin(n * t),
        )
        return d_r, d_t

    # Closed forms below were checked against quadrature of the tangents
    # (tests/test_surfaces.py, acceptance criterion 7).
    def _circumference(self, r):
        return TWO_PI * (1.0 / r + r ** (2 * self.n + 1))

    def _radial(self, r0, r1):
        m = 2 * self.n + 1

        def F(r):
            return -1.0 / r + r**m / m

        return F(r1) - F(r0)


@dataclass(frozen=True)
class Bour(Surface):
    """Bour's minimal surface, ``0 <= r <= r_max <= 1``, theta over ``[0, 4*pi]``."""

    r_max: float = 1.0
    family: ClassVar[str] = "bour"
    theta_span: ClassVar[float] = 2.0 * TWO_PI

    def __post_init__(self):
        super().__post_init__()
        if not (0 < self.r_max <= 1):
            raise DomainError("Bour r_max must lie in (0, 1]")

    def r_domain(self):
        return (0.0, self.r_max)

    def _xyz(self, r, t):
        x = r * np.cos(t) - 0.5 * r**2 * np.cos(2 * t)
        y = -r * np.sin(t) - 0.5 * r**2 * np.sin(2 * t)
        z = 4.0 / 3.0 * r**1.5 * np.cos(1.5 * t)
        return x, y, z

    def _tangents(self, r, t):
        d_r = (
            math.cos(t) - r * math.cos(2 * t),
            -math.sin(t) - r * math.sin(2 * t),
            2.0 * math.sqrt(r) * math.cos(1.5 * t),
        )
        d_t = (
            -r * math.sin(t) + r**2 * math.sin(2 * t),
            -r * math.cos(t) - r**2 * math.cos(2 * t),
            -2.0 * r**1.5 * math.sin(1.5 * t),
        )
        return d_r, d_t

    def _circumference(self, r):
        return 2.0 * TWO_PI * r * (1.0 + r)

    def _radial(self, r0, r1):
        return (r1 + 0.5 * r1**2) - (r0 + 0.5 * r0**2)


@dataclass(frozen=True)
class Catenoid(Surface):
    """Catenoid with neck radius ``c``; ``r`` is the signed intrinsic distance from the neck."""

    c: float = 1.0
    r_max: float = 3.0
    family: ClassVar[str] = "catenoid"

    def __post_init__(self):
        super().__post_init__()
        if not (self.c > 0 and self.r_max > 0):
            raise DomainError("catenoid needs c > 0 and r_max > 0")

    def r_domain(self):
        return (-self.r_max, self.r_max)

    def default_anchor(self):
        return 0.0

    def _xyz(self, r, t):
        rho = np.sqrt(self.c**2 + r**2)
        return rho * np.cos(t), rho * np.sin(t), self.c * np.arcsinh(r / self.c)

    def _tangents(self, r, t):
        rho = math.sqrt(self.c**2 + r**2)
        return (
            (r / rho * math.cos(t), r / rho * math.sin(t), self.c / rho),
            (-rho * math.sin(t), rho * math.cos(t), 0.0),
        )

    def _circumference(self, r):
        return TWO_PI * math.sqrt(self.c**2 + r**2)

    def _radial(self, r0, r1):
        return r1 - r0

    def _radial_inverse(self, anchor, length, direction):
        return anchor + direction * length


@dataclass(frozen=True)
class Helicoid(Surface):
    """Helicoid ``(r cos t, r sin t, c t)``; rows follow the helices of constant ``r``."""

    c: float = 1.0
    turns: int = 1
    r_max: float = 3.0
    family: ClassVar[str] = "helicoid"
    closed_theta: ClassVar[bool] = False

    def __post_init__(self):
        super().__post_init__()
        if not (self.c > 0 and self.r_max > 0):
            raise DomainError("helicoid needs c > 0 and r_max > 0")
        if not (isinstance(self.turns, int) and self.turns >= 1):
            raise DomainError("helicoid turns must be an integer >= 1")

    def r_domain(self):
        return (-self.r_max, self.r_max)

    def theta_domain(self):
        return (0.0, TWO_PI * self.turns)

    def default_anchor(self):
        return 0.0

    def _xyz(self, r, t):
        return r * np.cos(t), r * np.sin(t), self.c * t + 0 * r

    def _tangents(self, r, t):
        return (math.cos(t), math.sin(t), 0.0), (-r * math.sin(t), r * math.cos(t), self.c)

    # no closed circumference: the per-turn row length is integrated so the
    # catenoid isometry check compares two independent routes
    def _radial(self, r0, r1):
        return r1 - r0

    def _radial_inverse(self, anchor, length, direction):
        return anchor + direction * length

    def row_length(self, r: float) -> float:
        """Length in cm of the full row (all turns) at axis distance ``r``."""
        return self.circumference(r) * self.turns


@dataclass(frozen=True)
class MobiusRuled(Surface):
    """Ruled Moebius band ``((1 + r cos t) cos 2t, (1 + r cos t) sin 2t, r sin t)``.

    ``r`` runs over ``[-half_width, half_width]`` and ``theta`` over ``[0, pi]``.
    The band has one boundary: the curve at ``r = w`` for ``theta`` in
    ``[0, pi]`` continues as ``r = -w`` because ``sigma(-w, t) = sigma(w, t + pi)``,
    so the boundary is traced by ``r = w`` over ``theta`` in ``[0, 2*pi]``.
    """

    half_width: float = 0.5
    family: ClassVar[str] = "moebius"
    theta_span: ClassVar[float] = math.pi

    def __post_init__(self):
        super().__post_init__()
        if not (0 < self.half_width < 1):
            raise DomainError("Moebius half_width must lie in (0, 1)")

    def r_domain(self):
        return (-self.half_width, self.half_width)

    def default_anchor(self):
        return 0.0

    def _xyz(self, r, t):
        rho = 1 + r * np.cos(t)
        return rho * np.cos(2 * t), rho * np.sin(2 * t), r * np.sin(t)

    def _tangents(self, r, t):
        rho = 1 + r * math.cos(t)
        c2, s2 = math.cos(2 * t), math.sin(2 * t)
        d_r = (math.cos(t) * c2, math.cos(t) * s2, math.sin(t))
        d_t = (
            -r * math.sin(t) * c2 - 2 * rho * s2,
            -r * math.sin(t) * s2 + 2 * rho * c2,
            r * math.cos(t),
        )
        return d_r, d_t

    def speed(self, w: float, theta: float) -> float:
        """|d sigma / d theta| at ``(w, theta)``, unscaled; valid for any real theta."""
        return math.sqrt(4 * (1 + w * math.cos(theta)) ** 2 + w * w)

    def boundary_length(self, w: float, tol: float = 1e-12) -> float:
        """Length (cm) of the single boundary curve of the band of half-width ``w``."""
        self._check_r(w)
        if w == 0:
            return self.center_length(tol)
        res = numerics.integrate(lambda t: self.speed(w, t), 0.0, TWO_PI, tol)
        return res.value * self.scale

    def boundary_length_halves(self, w: float, tol: float = 1e-12) -> float:
        """Same length as two half-integrals over ``theta`` in ``[0, pi]`` at ``+w`` and ``-w``."""
        self._check_r(w)
        a = numerics.integrate(lambda t: self.speed(w, t), 0.0, math.pi, tol).value
        b = numerics.integrate(lambda t: self.speed(-w, t), 0.0, math.pi, tol).value
        return (a + b) * self.scale

    def center_length(self, tol: float = 1e-12) -> float:
        return numerics.integrate(lambda t: self.speed(0.0, t), 0.0, math.pi, tol).value * self.scale

    def circumference(self, r: float) -> float:
        """Center curve at ``r = 0``; otherwise the boundary of half-width ``|r|``."""
        self._check_r(r)
        return self.boundary_length(abs(r))

    def _radial(self, r0, r1):
        return r1 - r0

    def _radial_inverse(self, anchor, length, direction):
        return anchor + direction * length


FAMILIES: dict[str, type[Surface]] = {
    cls.family: cls
    for cls in (Disc, Sphere, Hyperbolic, Enneper, Richmond, Bour, Catenoid, Helicoid, MobiusRuled)
}


def make_surface(family: str, **params: Any) -> Surface:
    """Build a surface from its family name and keyword parameters."""
    try:
        cls = FAMILIES[family.lower()]
    except KeyError:
        raise DomainError(
            f"unknown surface {family!r}; choose from {', '.join(sorted(FAMILIES))}"
        ) from None
    return cls(**params)


# ---------------------------------------------------------------------------
# functional front-end


def point(surface: Surface, r: float, theta: float) -> SurfacePoint:
    return surface.point(r, theta)


def metric(surface: Surface, r: float, theta: float) -> MetricSample:
    return surface.metric(r, theta)


def circumference(surface: Surface, r: float) -> float:
    return surface.circumference(r)


def radial_arclength(surface: Surface, r0: float, r1: float) -> float:
    return surface.radial_arclength(r0, r1)


def invert_radius(surface: Surface, R: float, anchor: float | None = None, direction: int = 1) -> float:
    return surface.invert_radius(R, anchor, direction)


def mean_curvature(surface: Surface, r: float, theta: float) -> float:
    return surface.mean_curvature(r, theta)


def gaussian_curvature(surface: Surface, r: float, theta: float) -> float:
    return surface.gaussian_curvature(r, theta)


def min_circumference_radius(surface: Surface, tol: float = 1e-12) -> float:
    """Parameter of the shortest round of a Richmond surface."""
    if not isinstance(surface, Richmond):
        raise NotApplicableError(
            f"not applicable: shortest-round search is defined for richmond, not {surface.family}"
        )
    if surface.r_min == surface.r_max:
        return surface.r_min
    return numerics.minimize_scalar(surface.circumference, surface.r_min, surface.r_max, tol)
