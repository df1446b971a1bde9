"""Compile a surface and a stitch gauge into round-by-round crochet plans.

Round ``l`` sits at intrinsic radius ``R = l * H`` from the starting point.
Its stitch count is the circumference at that radius divided by the stitch
width, rounded half-up. Counts always come from the circumference itself;
the per-round change ``delta`` is the difference of two such counts and is
never accumulated on its own.

Changes between rounds are recorded as parent indices. ``increases`` lists a
parent once per extra child (a parent listed twice gets three children).
``decreases`` lists the first parent of a group; a parent listed ``m`` times
merges parents ``p .. p+m`` into one child.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Literal, Sequence

import numpy as np

from . import numerics
from .errors import DomainError, GaugeError, NotApplicableError
from .surfaces import (
    TWO_PI,
    Bour,
    Catenoid,
    Disc,
    Enneper,
    Helicoid,
    Hyperbolic,
    MobiusRuled,
    Richmond,
    Sphere,
    Surface,
    min_circumference_radius,
)

Direction = Literal["outward", "inward", "mirror"]
Kind = Literal["ring", "chain", "round", "row"]
Construction = Literal[
    "closed-rounds",
    "mirrored-sphere",
    "bidirectional-richmond",
    "rows-helicoid",
    "moebius-boundary",
]

GAUGE_MIN, GAUGE_MAX = 0.1, 5.0
MIN_CLOSED_STITCHES = 4
_ROUND_SLACK = 1e-9


@dataclass(frozen=True)
class Gauge:
    """Measured stitch size in cm: ``width`` is W, ``height`` is H."""

    width: float
    height: float

    def __post_init__(self) -> None:
        for name in ("width", "height"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise GaugeError(f"stitch {name} must be a finite number")
            if not GAUGE_MIN <= value <= GAUGE_MAX:
                raise GaugeError(
                    f"stitch {name} {value!r} cm outside [{GAUGE_MIN}, {GAUGE_MAX}] cm"
                )

    @classmethod
    def parse(cls, text: str) -> "Gauge":
        """Parse ``"WxH"`` in cm, e.g. ``"0.5x0.4"``."""
        parts = text.lower().split("x")
        if len(parts) != 2:
            raise GaugeError(f"gauge must look like WxH, got {text!r}")
        try:
            w, h = float(parts[0]), float(parts[1])
        except ValueError:
            raise GaugeError(f"gauge must look like WxH, got {text!r}") from None
        return cls(w, h)


@dataclass(frozen=True)
class RoundPlan:
    index: int
    direction: Direction
    radius: float
    circumference: float
    stitches: int
    delta: int
    increases: tuple[int, ...] = ()
    decreases: tuple[int, ...] = ()
    theta_offsets: tuple[float, ...] | None = None
    #: position of the parent round inside ``Pattern.rounds``
    parent: int | None = None
    #: parent stitches worked into; differs from the parent's count when the
    #: round is worked along both sides of a chain
    parent_slots: int = 0
    r_param: float = 0.0
    kind: Kind = "round"
    theta_mids: tuple[float, ...] | None = field(default=None, repr=False, compare=False)

    @property
    def change_positions(self) -> tuple[int, ...]:
        return tuple(sorted(self.increases + self.decreases))

    @property
    def closed(self) -> bool:
        return self.kind != "row"


@dataclass(frozen=True)
class Pattern:
    surface: Surface
    gauge: Gauge
    rounds: tuple[RoundPlan, ...]
    construction: Construction
    notes: tuple[str, ...] = ()

    @property
    def total_stitches(self) -> int:
        return sum(p.stitches for p in self.rounds)

    @property
    def counts(self) -> list[int]:
        return [p.stitches for p in self.rounds]


# ---------------------------------------------------------------------------
# counting and allocation


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def stitch_count(C: float, W: float, closed: bool = True) -> int:
    """Stitches needed for a round of length ``C`` cm at stitch width ``W`` cm."""
    if C < 0 or not W > 0:
        raise ValueError("need C >= 0 and W > 0")
    n = round_half_up(C / W)
    return max(n, MIN_CLOSED_STITCHES if closed else 1)


def _even_positions(total: int, k: int, phase: float) -> list[int]:
    # floor(total * (j + phase) / k): consecutive gaps differ by at most one
    return [math.floor(total * (j + phase) / k) for j in range(k)]


def allocate_changes(prev_n: int, next_n: int, phase: float = 0.0) -> tuple[int, ...]:
    """Evenly spaced parents to increase into (``next_n > prev_n``) or to
    decrease from (``next_n < prev_n``).

    ``phase`` in ``[0, 1)`` shifts the selection by that fraction of the gap
    between changes; successive rounds use phases 0, 1/2, 0, ... so increases
    are staggered instead of stacked. Up to three children per parent and
    pairwise decreases are supported.
    """
    if prev_n < 1 or next_n < 1:
        raise GaugeError("stitch counts must be positive")
    if next_n > 3 * prev_n or 2 * next_n < prev_n:
        raise GaugeError(
            f"gauge incompatible with curvature growth: {prev_n} -> {next_n} stitches"
        )
    phase = phase % 1.0
    d = next_n - prev_n
    if d == 0:
        return ()
    if d > 0:
        if d <= prev_n:
            return tuple(_even_positions(prev_n, d, phase))
        extra = _even_positions(prev_n, d - prev_n, phase)
        return tuple(sorted(list(range(prev_n)) + extra))
    positions = _even_positions(prev_n, -d, phase)
    if positions[-1] == prev_n - 1:
        # keep every merged pair inside the round instead of across its start
        positions = [p - 1 for p in positions]
    return tuple(positions)


def stitch_ops(plan: RoundPlan) -> list[tuple[str, int, int]]:
    """The round as a list of ``(op, parents_used, children_made)`` in parent order.

    Ops are ``sc`` (1 -> 1), ``inc`` (1 -> 2), ``inc3`` (1 -> 3),
    ``dec`` (2 -> 1) and ``dec3`` (3 -> 1).
    """
    slots = plan.parent_slots
    extra: dict[int, int] = {}
    for p in plan.increases:
        extra[p] = extra.get(p, 0) + 1
    merge: dict[int, int] = {}
    for p in plan.decreases:
        merge[p] = merge.get(p, 0) + 1
    ops: list[tuple[str, int, int]] = []
    p = 0
    while p < slots:
        if p in merge:
            m = merge[p]
            if m > 2 or p + m >= slots or any(q in extra or q in merge for q in range(p + 1, p + m + 1)):
                raise ValueError(f"malformed decrease group at parent {p}")
            if p in extra:
                raise ValueError(f"parent {p} both increased and decreased")
            ops.append(("dec" if m == 1 else "dec3", m + 1, 1))
            p += m + 1
            continue
        e = extra.get(p, 0)
        if e > 2:
            raise ValueError(f"parent {p} has more than three children")
        ops.append((("sc", "inc", "inc3")[e], 1, 1 + e))
        p += 1
    return ops


def parent_links(plan: RoundPlan) -> list[list[int]]:
    """For every child stitch, the parent slots it is worked into."""
    links: list[list[int]] = []
    p = 0
    for _op, used, made in stitch_ops(plan):
        if used == 1:
            links.extend([[p] for _ in range(made)])
        else:
            links.append(list(range(p, p + used)))
        p += used
    return links


def decrease_children(plan: RoundPlan) -> tuple[int, ...]:
    """Child indices produced by decreases, listed once per merged extra parent."""
    out: list[int] = []
    for child, parents in enumerate(parent_links(plan)):
        out.extend([child] * (len(parents) - 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# closed rounds


def _round_count(
    surface: Surface,
    gauge: Gauge,
    rounds: int | None,
    stop_radius: float | None,
    anchor: float | None = None,
    direction: int = 1,
) -> int:
    if rounds is not None and stop_radius is not None:
        raise ValueError("give either rounds or stop_radius, not both")
    H = gauge.height
    limit = surface.radius_limit(anchor, direction)
    if rounds is not None:
        if rounds < 0:
            raise ValueError("rounds must be non-negative")
        if rounds * H > limit * (1 + 1e-12):
            raise DomainError(
                f"radius unreachable: {rounds} rounds need R={rounds * H:g} cm, "
                f"{surface.family} reaches {limit:g} cm"
            )
        return rounds
    if stop_radius is not None:
        if stop_radius > limit * (1 + 1e-12):
            raise DomainError(
                f"radius unreachable: stop radius {stop_radius:g} cm exceeds {limit:g} cm"
            )
        return math.floor(stop_radius / H + _ROUND_SLACK)
    if math.isinf(limit):
        raise DomainError(f"{surface.family} is unbounded; give rounds or a stop radius")
    return math.floor(limit / H + _ROUND_SLACK)


def _grow(
    surface: Surface,
    gauge: Gauge,
    count: int,
    *,
    anchor: float,
    direction: int,
    label: Direction,
    parent: RoundPlan | None,
    parent_pos: int | None,
    first_pos: int,
    closed: bool = True,
    length_factor: float = 1.0,
) -> list[RoundPlan]:
    """Rounds ``l = 1..count`` at ``R = l*H`` from ``anchor``.

    ``parent`` is the round the first new round is worked into (``None``
    starts from a magic ring). ``first_pos`` is the position the first new
    round will take in the pattern.
    """
    out: list[RoundPlan] = []
    phase = 0.0
    prev, prev_pos = parent, parent_pos
    for ell in range(1, count + 1):
        R = ell * gauge.height
        r = surface.invert_radius(R, anchor, direction)
        C = surface.circumference(r) * length_factor
        N = stitch_count(C, gauge.width, closed)
        if prev is None:
            plan = RoundPlan(
                index=ell, direction=label, radius=R, circumference=C, stitches=N,
                delta=N, parent=None, parent_slots=0, r_param=r, kind="ring",
            )
        else:
            changes = allocate_changes(prev.stitches, N, phase)
            if changes:
                phase = (phase + 0.5) % 1.0
            plan = RoundPlan(
                index=ell, direction=label, radius=R, circumference=C, stitches=N,
                delta=N - prev.stitches,
                increases=changes if N > prev.stitches else (),
                decreases=changes if N < prev.stitches else (),
                parent=prev_pos, parent_slots=prev.stitches, r_param=r,
                kind="round" if closed else "row",
            )
        out.append(plan)
        prev, prev_pos = plan, first_pos + ell - 1
    return out


def plan_rounds(
    surface: Surface,
    gauge: Gauge,
    rounds: int | None = None,
    stop_radius: float | None = None,
) -> list[RoundPlan]:
    """Closed rounds from a magic ring at the surface's anchor point."""
    count = _round_count(surface, gauge, rounds, stop_radius)
    return _grow(
        surface, gauge, count,
        anchor=surface.default_anchor(), direction=1, label="outward",
        parent=None, parent_pos=None, first_pos=0,
    )


def round_counts(surface: Surface, gauge: Gauge, rounds: int) -> list[int]:
    """Stitch counts only, for fast scans over scale or gauge."""
    out = []
    for ell in range(1, rounds + 1):
        r = surface.invert_radius(ell * gauge.height)
        out.append(stitch_count(surface.circumference(r), gauge.width))
    return out


# ---------------------------------------------------------------------------
# sphere


def sphere_round_total(surface: Sphere, gauge: Gauge) -> int:
    """Rounds strictly between the poles: ``round(pi*S/H) - 1``."""
    return round_half_up(math.pi * surface.S * surface.scale / gauge.height) - 1


def mirror_sphere(plans: Sequence[RoundPlan], surface: Surface, gauge: Gauge) -> list[RoundPlan]:
    """Append the second hemisphere: the first half worked in reverse.

    With ``K`` rounds between the poles the first ``ceil(K/2)`` are computed
    and the rest mirror them. When ``K`` is even the equator round is
    repeated once. Each mirror round undoes the increases of the round it
    reflects, decreasing over exactly the stitches those increases made.
    """
    if not isinstance(surface, Sphere):
        raise NotApplicableError(f"not applicable: mirroring needs a sphere, got {surface.family}")
    K = sphere_round_total(surface, gauge)
    if K < 1:
        raise GaugeError("sphere too small for this stitch height")
    half = (K + 1) // 2
    if len(plans) < half:
        raise ValueError(f"need the first {half} rounds, got {len(plans)}")
    first = list(plans[:half])
    out = list(first)
    H = gauge.height
    pole = math.pi * surface.S

    def mirrored(src: RoundPlan, undo: RoundPlan | None, pos: int) -> RoundPlan:
        ell = pos + 1
        prev = out[-1]
        decreases: list[int] = []
        if undo is not None:
            # undo went src -> prev; children of its increased parents merge back
            child = 0
            extra: dict[int, int] = {}
            for p in undo.increases:
                extra[p] = extra.get(p, 0) + 1
            for p in range(undo.parent_slots):
                e = extra.get(p, 0)
                decreases.extend([child] * e)
                child += 1 + e
        return RoundPlan(
            index=ell, direction="mirror", radius=ell * H,
            circumference=src.circumference, stitches=src.stitches,
            delta=src.stitches - prev.stitches, decreases=tuple(decreases),
            parent=pos - 1, parent_slots=prev.stitches,
            r_param=min(ell * H / surface.scale, pole),
        )

    if K % 2 == 0:
        out.append(mirrored(first[-1], None, len(out)))
    for j in range(half - 2, -1, -1):
        out.append(mirrored(first[j], first[j + 1], len(out)))
    return out


def plan_sphere(surface: Sphere, gauge: Gauge) -> Pattern:
    K = sphere_round_total(surface, gauge)
    if K < 1:
        raise GaugeError("sphere too small for this stitch height")
    half = plan_rounds(surface, gauge, rounds=(K + 1) // 2)
    rounds = mirror_sphere(half, surface, gauge)
    notes = ["second half worked as the first in reverse, decreasing"]
    if K % 2 == 0:
        notes.append("equator round worked twice")
    return Pattern(surface, gauge, tuple(rounds), "mirrored-sphere", tuple(notes))


# ---------------------------------------------------------------------------
# foundation-chain starts: Richmond, catenoid, helicoid


def _chain(surface: Surface, gauge: Gauge, r: float, length_factor: float = 1.0,
           closed: bool = True) -> RoundPlan:
    C = surface.circumference(r) * length_factor
    N = stitch_count(C, gauge.width, closed)
    return RoundPlan(
        index=0, direction="outward", radius=0.0, circumference=C, stitches=N,
        delta=N, r_param=r, kind="chain",
    )


def plan_bidirectional(surface: Richmond, gauge: Gauge, rounds: int | None = None) -> Pattern:
    """Start at the shortest round and grow toward ``r_max`` and ``r_min`` separately.

    Both directions only increase, because the circumference grows on either
    side of its minimum. ``rounds`` optionally caps each direction.
    """
    if not isinstance(surface, Richmond):
        raise NotApplicableError(f"not applicable: bidirectional plan needs richmond, got {surface.family}")
    r_star = min_circumference_radius(surface)
    start = _chain(surface, gauge, r_star)
    out = [start]
    notes = [f"start with a ring of {start.stitches} chains at the shortest round (r={r_star:.6f})"]
    if surface.r_min == surface.r_max:
        return Pattern(surface, gauge, tuple(out), "bidirectional-richmond", tuple(notes))

    edge_tol = 1e-9 * max(1.0, r_star)
    for direction, label in ((1, "outward"), (-1, "inward")):
        end = surface.r_max if direction > 0 else surface.r_min
        if abs(r_star - end) <= edge_tol:
            notes.append(f"shortest round lies on the domain edge; no {label} section")
            continue
        limit = surface.radius_limit(r_star, direction)
        count = math.floor(limit / gauge.height + _ROUND_SLACK)
        if rounds is not None:
            count = min(count, rounds)
        grown = _grow(
            surface, gauge, count, anchor=r_star, direction=direction, label=label,
            parent=start, parent_pos=0, first_pos=len(out),
        )
        out.extend(grown)
    if any(p.direction == "inward" for p in out):
        notes.append("inward rounds are worked into the other side of the starting chain")
    return Pattern(surface, gauge, tuple(out), "bidirectional-richmond", tuple(notes))


def plan_catenoid(surface: Catenoid, gauge: Gauge, rounds: int | None = None,
                  stop_radius: float | None = None) -> Pattern:
    start = _chain(surface, gauge, 0.0)
    count = _round_count(surface, gauge, rounds, stop_radius, 0.0, 1)
    grown = _grow(
        surface, gauge, count, anchor=0.0, direction=1, label="outward",
        parent=start, parent_pos=0, first_pos=1,
    )
    notes = (
        f"start with a ring of {start.stitches} chains around the neck",
        "work the same rounds into the other side of the chain for the second half",
    )
    return Pattern(surface, gauge, (start, *grown), "closed-rounds", notes)


def plan_helicoid(surface: Helicoid, gauge: Gauge, rounds: int | None = None,
                  stop_radius: float | None = None) -> Pattern:
    """Open rows at axis distance ``l*H``; counts match catenoid rounds times turns."""
    start = _chain(surface, gauge, 0.0, surface.turns, closed=False)
    start = replace(start, kind="row")
    count = _round_count(surface, gauge, rounds, stop_radius, 0.0, 1)
    grown = _grow(
        surface, gauge, count, anchor=0.0, direction=1, label="outward",
        parent=start, parent_pos=0, first_pos=1, closed=False,
        length_factor=surface.turns,
    )
    notes = (
        f"row 0 is a chain of {start.stitches} along the axis ({surface.turns} turn(s))",
        "turn at the end of every row; the other side of the axis repeats these rows",
    )
    return Pattern(surface, gauge, (start, *grown), "rows-helicoid", notes)


# ---------------------------------------------------------------------------
# Moebius band


class _ArcTable:
    """Cumulative arc length of a closed theta-curve with exact inversion."""

    def __init__(self, speed, span: float, panels: int = 128) -> None:
        self.speed = speed
        self.edges = [span * i / panels for i in range(panels + 1)]
        cum = [0.0]
        for a, b in zip(self.edges, self.edges[1:]):
            cum.append(cum[-1] + numerics.integrate(speed, a, b, 1e-13).value)
        self.cum = cum
        self.length = cum[-1]

    def theta_at(self, s: float) -> float:
        i = min(max(bisect.bisect_right(self.cum, s) - 1, 0), len(self.edges) - 2)
        a, b = self.edges[i], self.edges[i + 1]
        base = self.cum[i]
        target = s - base
        if target <= 0:
            return a
        if s >= self.cum[i + 1]:
            return b
        return numerics.find_root(
            lambda t: numerics.integrate(self.speed, a, t, 1e-14).value - target, a, b, 1e-13
        )


def _counts_to_changes(counts: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Turn children-per-parent counts into increase and decrease lists.

    A parent without children is paired with a neighbour (the previous one
    when possible) and the pair shares that neighbour's children.
    """
    c = list(counts)
    P = len(c)
    paired = [False] * P
    dec_groups: list[int] = []
    for p in range(P):
        if c[p] != 0:
            continue
        partner = None
        for q in (p - 1, p + 1):
            if 0 <= q < P and not paired[q] and c[q] >= 1:
                partner = q
                break
        if partner is None:
            raise GaugeError(
                "gauge incompatible with curvature growth: stitch too wide for local shrinkage"
            )
        a, b = min(p, partner), max(p, partner)
        paired[a] = paired[b] = True
        k = c[partner]
        if k == 1:
            c[a] = c[b] = 0
            dec_groups.append(a)
        else:
            c[a], c[b] = (k + 1) // 2, k // 2
    increases: list[int] = []
    for p in range(P):
        if c[p] > 3:
            raise GaugeError(
                "gauge incompatible with curvature growth: more than three stitches into one"
            )
        increases.extend([p] * max(c[p] - 1, 0))
    return tuple(increases), tuple(sorted(dec_groups))


def plan_moebius(surface: MobiusRuled, gauge: Gauge, rounds: int | None = None) -> Pattern:
    """Rounds along the single boundary of the ruled Moebius band.

    Round 0 is the centre circle. Round ``l`` is the boundary of the band of
    half-width ``w = l*H/scale``, a single closed curve traced by ``r = w``
    for ``theta`` in ``[0, 2*pi]``. Stitches are placed at equal arc length
    along it, so they are not evenly spaced in ``theta``. A child belongs to
    the parent whose ``theta`` interval holds its midpoint. Rulings meet
    the boundary curves at right angles, so that parent lies straight below.
    """
    if not isinstance(surface, MobiusRuled):
        raise NotApplicableError(f"not applicable: needs a moebius band, got {surface.family}")
    H, W, s = gauge.height, gauge.width, surface.scale
    if rounds is None:
        rounds = math.floor(surface.half_width * s / H + _ROUND_SLACK)
    if rounds * H / s > 1 + 1e-12:
        raise DomainError(
            f"band too wide for parametrization: half-width {rounds * H / s:g} > 1"
        )

    center_len = surface.center_length()
    n0 = stitch_count(center_len, W)
    offsets0 = tuple(math.pi * j / n0 for j in range(n0))
    mids0 = tuple(math.pi * (j + 0.5) / n0 for j in range(n0))
    out = [RoundPlan(
        index=0, direction="outward", radius=0.0, circumference=center_len, stitches=n0,
        delta=n0, theta_offsets=offsets0, r_param=0.0, kind="chain", theta_mids=mids0,
    )]
    # round 1 works along both sides of the chain: virtual parents cover [0, 2pi)
    parent_bounds = [math.pi * j / n0 for j in range(2 * n0)]
    for ell in range(1, rounds + 1):
        w = ell * H / s
        table = _ArcTable(lambda t, w=w: surface.speed(w, t), TWO_PI)
        length = table.length * s
        N = stitch_count(length, W)
        step = table.length / N
        bounds = tuple(table.theta_at(j * step) for j in range(N))
        mids = tuple(table.theta_at((j + 0.5) * step) for j in range(N))
        counts = [0] * len(parent_bounds)
        for m in mids:
            counts[bisect.bisect_right(parent_bounds, m) - 1] += 1
        inc, dec = _counts_to_changes(counts)
        prev = out[-1]
        out.append(RoundPlan(
            index=ell, direction="outward", radius=ell * H, circumference=length,
            stitches=N, delta=N - prev.stitches, increases=inc, decreases=dec,
            theta_offsets=bounds, parent=len(out) - 1, parent_slots=len(parent_bounds),
            r_param=w, theta_mids=mids,
        ))
        parent_bounds = list(bounds)
    notes = (
        f"chain {n0}, give the chain a half twist and join into a loop",
        "round 1 is worked along both sides of the chain",
        "stitches sit at equal arc length along the boundary; follow the listed changes exactly",
    )
    return Pattern(surface, gauge, tuple(out), "moebius-boundary", notes)


# ---------------------------------------------------------------------------
# dispatcher


def compile_pattern(
    surface: Surface,
    gauge: Gauge,
    rounds: int | None = None,
    stop_radius: float | None = None,
) -> Pattern:
    """Build the full pattern for any catalog surface."""
    if isinstance(surface, Sphere):
        if rounds is None and stop_radius is None:
            return plan_sphere(surface, gauge)
        plans = plan_rounds(surface, gauge, rounds, stop_radius)
        return Pattern(surface, gauge, tuple(plans), "closed-rounds", ("partial sphere cap",))
    if isinstance(surface, Richmond):
        if stop_radius is not None:
            rounds = math.floor(stop_radius / gauge.height + _ROUND_SLACK)
        return plan_bidirectional(surface, gauge, rounds)
    if isinstance(surface, Catenoid):
        return plan_catenoid(surface, gauge, rounds, stop_radius)
    if isinstance(surface, Helicoid):
        return plan_helicoid(surface, gauge, rounds, stop_radius)
    if isinstance(surface, MobiusRuled):
        if stop_radius is not None:
            rounds = math.floor(stop_radius / gauge.height + _ROUND_SLACK)
        return plan_moebius(surface, gauge, rounds)
    if isinstance(surface, (Disc, Hyperbolic, Enneper, Bour)):
        plans = plan_rounds(surface, gauge, rounds, stop_radius)
        notes: tuple[str, ...] = ()
        if isinstance(surface, Bour):
            notes = ("rounds sweep theta over [0, 4pi]: start from a dual magic ring",)
        return Pattern(surface, gauge, tuple(plans), "closed-rounds", notes)
    raise NotApplicableError(f"no pattern compiler for {surface.family}")


# ---------------------------------------------------------------------------
# stitch graph


@dataclass(frozen=True)
class StitchNode:
    round: int
    index: int
    theta: float
    xyz: tuple[float, float, float] | None = None


@dataclass(frozen=True)
class StitchGraph:
    nodes: tuple[StitchNode, ...]
    #: (child node id, parent node id)
    parent_edges: tuple[tuple[int, int], ...]
    lateral_edges: tuple[tuple[int, int], ...]
    #: first node id of every round, plus the total node count at the end
    round_starts: tuple[int, ...]

    def round_nodes(self, k: int) -> range:
        return range(self.round_starts[k], self.round_starts[k + 1])


def _theta_span(surface: Surface, plan: RoundPlan) -> float:
    if isinstance(surface, Helicoid):
        return TWO_PI * surface.turns
    if isinstance(surface, MobiusRuled):
        return math.pi if plan.kind == "chain" else TWO_PI
    return surface.theta_span


def build_stitch_graph(pattern: Pattern, with_points: bool = True) -> StitchGraph:
    surface = pattern.surface
    nodes: list[StitchNode] = []
    parents: list[tuple[int, int]] = []
    lateral: list[tuple[int, int]] = []
    starts: list[int] = []
    embed = with_points and surface.embedded
    for k, plan in enumerate(pattern.rounds):
        base = len(nodes)
        starts.append(base)
        N = plan.stitches
        if plan.theta_mids is not None:
            thetas = np.asarray(plan.theta_mids, float)
        else:
            thetas = _theta_span(surface, plan) * (np.arange(N) + 0.5) / N
        if embed:
            xyz = surface.points(np.full(N, plan.r_param), thetas)
            for i in range(N):
                nodes.append(StitchNode(k, i, float(thetas[i]), tuple(float(v) for v in xyz[i])))
        else:
            nodes.extend(StitchNode(k, i, float(thetas[i])) for i in range(N))
        for i in range(N - 1):
            lateral.append((base + i, base + i + 1))
        if plan.closed and N > 2:
            lateral.append((base + N - 1, base))
        if plan.parent is not None:
            pbase = starts[plan.parent]
            pn = pattern.rounds[plan.parent].stitches
            for child, slots in enumerate(parent_links(plan)):
                for slot in slots:
                    parents.append((base + child, pbase + slot % pn))
    starts.append(len(nodes))
    return StitchGraph(tuple(nodes), tuple(parents), tuple(lateral), tuple(starts))


def iter_rounds(pattern: Pattern, direction: Direction) -> Iterable[RoundPlan]:
    return (p for p in pattern.rounds if p.direction == direction)
