import math
from collections import Counter

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from curvelace.errors import DomainError, GaugeError, NotApplicableError
from curvelace.pattern import (
    Gauge,
    RoundPlan,
    allocate_changes,
    build_stitch_graph,
    compile_pattern,
    decrease_children,
    parent_links,
    plan_bidirectional,
    plan_rounds,
    plan_sphere,
    round_counts,
    round_half_up,
    sphere_round_total,
    stitch_count,
    stitch_ops,
)
from curvelace.surfaces import (
    Bour,
    Catenoid,
    Disc,
    Enneper,
    Helicoid,
    Hyperbolic,
    MobiusRuled,
    Richmond,
    Sphere,
)

PROPERTY = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def _plan(prev_n, next_n, phase=0.0):
    changes = allocate_changes(prev_n, next_n, phase)
    return RoundPlan(
        index=1, direction="outward", radius=0.0, circumference=0.0, stitches=next_n,
        delta=next_n - prev_n,
        increases=changes if next_n > prev_n else (),
        decreases=changes if next_n < prev_n else (),
        parent=0, parent_slots=prev_n,
    )


def _children_of_increases(plan):
    out, child = set(), 0
    for op, _used, made in stitch_ops(plan):
        if op.startswith("inc"):
            out.update(range(child, child + made))
        child += made
    return out


def _cyclic_gaps(positions, total):
    p = sorted(positions)
    return [(p[(i + 1) % len(p)] - p[i]) % total or total for i in range(len(p))]


# ---------------------------------------------------------------------------
# counting


def test_gauge():
    assert Gauge.parse("0.5x0.4") == Gauge(0.5, 0.4)
    for bad in ("0x1", "0.5", "ax0.4", "6x0.5", "0.5x0.05"):
        with pytest.raises(GaugeError):
            Gauge.parse(bad)


def test_stitch_count_rounding():
    assert round_half_up(2.5) == 3
    assert round_half_up(3.4999) == 3
    assert stitch_count(2 * math.pi * 0.5, 0.5) == 6
    assert stitch_count(0.1, 0.5) == 4  # closed rounds never drop below four
    assert stitch_count(0.1, 0.5, closed=False) == 1
    with pytest.raises(ValueError):
        stitch_count(1.0, 0.0)


def test_allocate_changes_examples():
    assert allocate_changes(6, 12) == (0, 1, 2, 3, 4, 5)
    assert allocate_changes(6, 13) == (0, 0, 1, 2, 3, 4, 5)
    assert allocate_changes(13, 19) == (0, 2, 4, 6, 8, 10)
    assert allocate_changes(13, 19, 0.5) == (1, 3, 5, 7, 9, 11)
    assert allocate_changes(10, 10) == ()
    assert allocate_changes(12, 9) == (0, 4, 8)
    assert allocate_changes(12, 9, 0.5) == (2, 6, 10)
    with pytest.raises(GaugeError, match="gauge incompatible"):
        allocate_changes(6, 19)
    with pytest.raises(GaugeError):
        allocate_changes(10, 4)


def test_disc_first_rounds():
    plans = plan_rounds(Disc(), Gauge(0.5, 0.5), rounds=3)
    assert [p.stitches for p in plans] == [6, 13, 19]
    assert [p.delta for p in plans] == [6, 7, 6]
    assert plans[0].kind == "ring"
    assert plans[2].increases == (1, 3, 5, 7, 9, 11)


def test_counts_come_from_circumference():
    for surface, gauge in [(Enneper(2, scale=2.11), Gauge(0.5, 0.4)), (Bour(scale=3.0), Gauge(0.4, 0.5)),
                           (Hyperbolic(2.0), Gauge(0.5, 0.5)), (Disc(), Gauge(0.5, 0.45))]:
        plans = plan_rounds(surface, gauge, rounds=8)
        for ell, plan in enumerate(plans, 1):
            r = surface.invert_radius(ell * gauge.height)
            assert plan.stitches == stitch_count(surface.circumference(r), gauge.width)
        assert [p.stitches for p in plans] == round_counts(surface, gauge, 8)


def test_table_reproduction_with_fitted_scale():
    counts = round_counts(Enneper(2, scale=2.11), Gauge(0.5, 0.4), 18)
    ref = [5, 11, 18, 25, 34, 43, 53, 63, 74, 85, 96, 107, 119, 131, 143, 155, 167, 180]
    assert sum(abs(a - b) for a, b in zip(counts, ref)) == 1
    assert sum(counts) == 1510


def test_disc_rule():
    plans = plan_rounds(Disc(), Gauge(0.5, 0.5), rounds=51)
    deltas = [p.delta for p in plans[1:]]
    assert set(deltas) <= {6, 7}
    assert 6.23 <= sum(deltas) / 50 <= 6.33
    for ratio in (0.8, 0.9, 1.0):
        plans = plan_rounds(Disc(), Gauge(0.5, 0.5 * ratio), rounds=51)
        mean = (plans[-1].stitches - plans[0].stitches) / 50
        assert mean == pytest.approx(2 * math.pi * ratio, abs=0.05)


def test_stop_radius_and_limits():
    assert len(plan_rounds(Disc(), Gauge(0.5, 0.5), stop_radius=2.6)) == 5
    with pytest.raises(DomainError, match="radius unreachable"):
        plan_rounds(Bour(), Gauge(0.5, 0.5), rounds=4)
    with pytest.raises(DomainError, match="unbounded"):
        plan_rounds(Enneper(2), Gauge(0.5, 0.5))
    assert len(plan_rounds(Bour(), Gauge(0.5, 0.5))) == 3


# ---------------------------------------------------------------------------
# sphere


@pytest.mark.parametrize("S", [1.0, 2.5, 4.0, 4.1])
def test_sphere_palindrome(S):
    gauge = Gauge(0.5, 0.5)
    pattern = plan_sphere(Sphere(S), gauge)
    counts = pattern.counts
    assert counts == counts[::-1]
    assert len(counts) == sphere_round_total(Sphere(S), gauge)
    for plan in pattern.rounds:
        if plan.direction == "mirror":
            assert plan.delta <= 0 and not plan.increases


def test_sphere_s4_peak():
    pattern = plan_sphere(Sphere(4.0), Gauge(0.5, 0.5))
    counts = pattern.counts
    assert max(counts) == round(2 * math.pi * 4 / 0.5) == 50
    assert counts[0] == counts[-1] == 6
    assert counts.count(50) >= 1
    assert pattern.construction == "mirrored-sphere"


@pytest.mark.parametrize("S", [3.0, 3.2, 4.0])
def test_sphere_mirror_undoes_increases(S):
    rounds = plan_sphere(Sphere(S), Gauge(0.5, 0.5)).rounds
    outward = [p for p in rounds if p.direction == "outward"]
    mirrors = [p for p in rounds if p.direction == "mirror"]
    undoing = mirrors[len(mirrors) - (len(outward) - 1):]
    # mirror rounds retrace the outward rounds from the equator back to the pole;
    # merging the stitches an increase made restores the stitch it was worked into
    for plan, src in zip(undoing, reversed(outward[1:])):
        assert plan.delta == -src.delta
        assert decrease_children(plan) == src.increases


# ---------------------------------------------------------------------------
# other constructions


def test_richmond_bidirectional():
    pattern = compile_pattern(Richmond(1, r_min=0.3, r_max=2.0), Gauge(0.5, 0.5))
    start = pattern.rounds[0]
    assert start.kind == "chain" and start.r_param == pytest.approx(3 ** -0.25, abs=1e-6)
    directions = {p.direction for p in pattern.rounds[1:]}
    assert directions == {"outward", "inward"}
    for plan in pattern.rounds[1:]:
        assert plan.delta >= 0
    first_in = next(p for p in pattern.rounds if p.direction == "inward")
    assert first_in.parent == 0


def test_richmond_degenerate_and_edge():
    single = plan_bidirectional(Richmond(1, r_min=1.0, r_max=1.0), Gauge(0.5, 0.5))
    assert len(single.rounds) == 1
    edge = plan_bidirectional(Richmond(1, r_min=1.0, r_max=2.0), Gauge(0.5, 0.5))
    assert {p.direction for p in edge.rounds[1:]} == {"outward"}
    assert any("edge" in n for n in edge.notes)
    with pytest.raises(NotApplicableError):
        plan_bidirectional(Enneper(2), Gauge(0.5, 0.5))


def test_catenoid_and_helicoid_counts_agree():
    gauge = Gauge(0.5, 0.5)
    cat = compile_pattern(Catenoid(1.0, r_max=3.0, scale=2.0), gauge)
    hel = compile_pattern(Helicoid(1.0, r_max=3.0, scale=2.0), gauge)
    assert cat.counts == hel.counts
    assert hel.construction == "rows-helicoid"
    assert all(not p.closed for p in hel.rounds)
    hel2 = compile_pattern(Helicoid(1.0, turns=2, r_max=3.0, scale=2.0), gauge)
    for a, b in zip(hel.rounds, hel2.rounds):
        assert b.stitches == stitch_count(2 * a.circumference, 0.5, closed=False)


def test_moebius_rounds():
    band = MobiusRuled(0.6, scale=5.0)
    pattern = compile_pattern(band, Gauge(0.5, 0.5))
    assert pattern.rounds[0].kind == "chain"
    assert pattern.rounds[1].parent_slots == 2 * pattern.rounds[0].stitches
    for plan in pattern.rounds[1:]:
        assert plan.stitches == stitch_count(band.boundary_length(plan.r_param), 0.5)
        assert len(parent_links(plan)) == plan.stitches
    with pytest.raises(DomainError, match="band too wide"):
        compile_pattern(band, Gauge(0.5, 0.5), rounds=11)


# ---------------------------------------------------------------------------
# property suites


@PROPERTY
@given(prev=st.integers(4, 400), data=st.data())
def test_evenness(prev, data):
    nxt = data.draw(st.integers(max(1, (prev + 1) // 2), 2 * prev))
    phase = data.draw(st.sampled_from([0.0, 0.5]))
    changes = allocate_changes(prev, nxt, phase)
    assert len(changes) == abs(nxt - prev)
    if changes and abs(nxt - prev) <= prev:
        gaps = _cyclic_gaps(changes, prev)
        assert max(gaps) - min(gaps) <= 1


@PROPERTY
@given(prev=st.integers(6, 400), data=st.data())
def test_stagger(prev, data):
    k = data.draw(st.integers(1, prev // 3))
    phase = data.draw(st.sampled_from([0.0, 0.5]))
    first = _plan(prev, prev + k, phase)
    second = allocate_changes(prev + k, prev + 2 * k, (phase + 0.5) % 1.0)
    # increases of the next round avoid every stitch made by this round's increases
    assert not set(second) & _children_of_increases(first)


@PROPERTY
@given(prev=st.integers(4, 300), data=st.data())
def test_parent_child_conservation(prev, data):
    nxt = data.draw(st.integers((prev + 1) // 2, 3 * prev))
    plan = _plan(prev, nxt, data.draw(st.sampled_from([0.0, 0.5])))
    ops = stitch_ops(plan)
    assert sum(made for _, _, made in ops) == nxt
    assert sum(used for _, used, _ in ops) == prev
    links = parent_links(plan)
    assert len(links) == nxt
    per_parent = Counter(p for ps in links for p in ps)
    assert set(per_parent) == set(range(prev))
    if nxt >= prev:
        assert all(1 <= c <= 3 for c in per_parent.values())
    else:
        assert all(1 <= len(ps) <= 2 for ps in links)


SURFACES = st.sampled_from([
    ("disc", lambda s: Disc(scale=s)),
    ("enneper2", lambda s: Enneper(2, scale=s)),
    ("enneper3", lambda s: Enneper(3, scale=s)),
    ("hyperbolic", lambda s: Hyperbolic(2.0, scale=s)),
    ("bour", lambda s: Bour(scale=4 * s)),
    ("sphere", lambda s: Sphere(3.0 * s)),
])


@PROPERTY
@given(surface=SURFACES, scale=st.floats(1.0, 2.5), ratio=st.floats(0.6, 1.4), rounds=st.integers(1, 12))
def test_graph_cycle_structure(surface, scale, ratio, rounds):
    _, make = surface
    s = make(scale)
    gauge = Gauge(0.5, round(0.5 * ratio, 3))
    if not isinstance(s, Sphere):
        limit = s.radius_limit()
        if math.isfinite(limit):
            rounds = min(rounds, math.floor(limit / gauge.height))
        assume(rounds >= 1)
    try:
        pattern = compile_pattern(s, gauge, rounds=None if isinstance(s, Sphere) else rounds)
    except GaugeError:
        # growth faster than three stitches per parent: rejected by design
        assume(False)
    graph = build_stitch_graph(pattern, with_points=False)
    assert len(graph.nodes) == pattern.total_stitches
    lateral = Counter()
    for a, b in graph.lateral_edges:
        lateral[a] += 1
        lateral[b] += 1
    for k, plan in enumerate(pattern.rounds):
        ids = graph.round_nodes(k)
        assert len(ids) == plan.stitches
        # each closed round is a single cycle: every node has lateral degree 2
        # and the round has as many lateral edges as nodes
        assert all(lateral[i] == 2 for i in ids)
    assert len(graph.lateral_edges) == len(graph.nodes)
    children = Counter(c for c, _ in graph.parent_edges)
    parents = Counter(p for _, p in graph.parent_edges)
    for k, plan in enumerate(pattern.rounds):
        if plan.parent is None:
            continue
        assert all(1 <= children[i] <= 3 for i in graph.round_nodes(k))
        assert all(parents[i] >= 1 for i in graph.round_nodes(plan.parent))
