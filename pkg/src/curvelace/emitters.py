"""Render patterns, meshes and stitch graphs as text, CSV, JSON and OBJ."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .errors import DomainError, NoEmbeddingError
from .pattern import Pattern, RoundPlan, StitchGraph, stitch_ops
from .surfaces import (
    Bour,
    Catenoid,
    Disc,
    Enneper,
    Helicoid,
    MobiusRuled,
    Richmond,
    Sphere,
    Surface,
)

SAMPLES_MIN, SAMPLES_MAX = 2, 4096


def _num(x: float) -> float:
    y = round(float(x), 6)
    return 0.0 if y == 0 else y


# ---------------------------------------------------------------------------
# text


def _runs(ops: list[str]) -> list[str]:
    items: list[str] = []
    i = 0
    while i < len(ops):
        j = i
        while j < len(ops) and ops[j] == ops[i]:
            j += 1
        k = j - i
        if ops[i] == "sc":
            items.append(f"{k} sc")
        else:
            items.append(ops[i] if k == 1 else f"{k} {ops[i]}")
        i = j
    return items


def compress(items: list[str]) -> str:
    """Shortest listing of ``items`` using ``(block) ×k`` repeats.

    Cost is the number of printed items plus one per repeat marker. Ties go
    to the earliest, shortest block, so the output is reproducible.
    """
    m = len(items)
    if m == 0:
        return ""
    ids = {s: i for i, s in enumerate(dict.fromkeys(items))}
    seq = [ids[s] for s in items]
    # match[b][i]: how many consecutive t >= i satisfy seq[t] == seq[t + b]
    match: dict[int, list[int]] = {}
    for b in range(1, m // 2 + 1):
        run = [0] * (m + 1)
        for i in range(m - b - 1, -1, -1):
            run[i] = run[i + 1] + 1 if seq[i] == seq[i + b] else 0
        match[b] = run
    best = [0] * (m + 1)
    choice: list[tuple[int, int]] = [(1, 1)] * (m + 1)
    for i in range(m - 1, -1, -1):
        best[i] = best[i + 1] + 1
        choice[i] = (1, 1)
        for b in range(1, (m - i) // 2 + 1):
            kmax = 1 + match[b][i] // b
            for k in range(2, kmax + 1):
                cost = b + 1 + best[i + b * k]
                if cost < best[i]:
                    best[i] = cost
                    choice[i] = (b, k)
    parts: list[str] = []
    i = 0
    while i < m:
        b, k = choice[i]
        if k == 1:
            parts.append(items[i])
            i += 1
        else:
            parts.append(f"({', '.join(items[i:i + b])}) ×{k}")
            i += b * k
    return ", ".join(parts)


def round_body(plan: RoundPlan) -> str:
    if plan.kind == "ring":
        return f"magic ring, {plan.stitches} sc"
    if plan.kind == "chain" or plan.parent is None:
        return f"ch {plan.stitches}"
    return compress(_runs([op for op, _, _ in stitch_ops(plan)]))


def _describe(surface: Surface) -> str:
    params = surface.params()
    family = params.pop("family")
    return f"{family} ({', '.join(f'{k}={v:g}' for k, v in params.items())})"


def render_text(pattern: Pattern) -> str:
    g = pattern.gauge
    lines = [
        f"Pattern: {_describe(pattern.surface)}",
        f"Gauge: W={g.width:g} cm, H={g.height:g} cm",
        f"Construction: {pattern.construction}",
    ]
    lines += [f"Note: {note}" for note in pattern.notes]
    lines.append("")
    section = None
    word = "Row" if pattern.construction == "rows-helicoid" else "Round"
    for plan in pattern.rounds:
        if plan.direction != section and plan.kind not in ("chain", "ring"):
            header = {
                "outward": "Outward" if pattern.construction == "bidirectional-richmond" else None,
                "inward": "Inward (other side of the starting chain)",
                "mirror": "Second half, decreasing",
            }[plan.direction]
            if header:
                lines.append(f"{header}:")
            section = plan.direction
        body = round_body(plan)
        if plan.kind == "chain":
            if pattern.construction == "moebius-boundary":
                body += ", half twist, join"
            elif plan.closed:
                body += ", join into a ring"
            lines.append(f"{word} {plan.index} ({plan.stitches} sts): {body}")
            continue
        if plan.parent_slots and plan.parent is not None:
            parent_n = pattern.rounds[plan.parent].stitches
            if plan.parent_slots == 2 * parent_n:
                body = f"along both sides of the chain: {body}"
        label = ", decrease" if plan.direction == "mirror" and plan.delta < 0 else ""
        if plan.kind == "row":
            body += ", turn"
        lines.append(f"{word} {plan.index} ({plan.stitches} sts, {plan.delta:+d}{label}): {body}")
    lines.append("")
    lines.append(f"Total: {pattern.total_stitches} stitches")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# tables


def render_csv(pattern: Pattern) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["l", "delta_N", "N"])
    for plan in pattern.rounds:
        delta = "" if plan.kind in ("ring", "chain") else plan.delta
        writer.writerow([plan.index, delta, plan.stitches])
    writer.writerow(["total", "", pattern.total_stitches])
    return buf.getvalue()


def pattern_dict(pattern: Pattern) -> dict[str, Any]:
    surface = {k: (_num(v) if isinstance(v, float) else v) for k, v in pattern.surface.params().items()}
    rounds = []
    for plan in pattern.rounds:
        entry: dict[str, Any] = {
            "l": plan.index,
            "direction": plan.direction,
            "R_cm": _num(plan.radius),
            "C_cm": _num(plan.circumference),
            "N": plan.stitches,
            "dN": plan.delta,
            "changes": {"increase": list(plan.increases), "decrease": list(plan.decreases)},
        }
        if plan.theta_offsets is not None:
            entry["theta_offsets"] = [_num(t) for t in plan.theta_offsets]
        rounds.append(entry)
    return {
        "surface": surface,
        "gauge": {"W": _num(pattern.gauge.width), "H": _num(pattern.gauge.height)},
        "rounds": rounds,
        "total": pattern.total_stitches,
        "construction": pattern.construction,
    }


def render_json(pattern: Pattern) -> str:
    return json.dumps(pattern_dict(pattern), indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# meshes


@dataclass(frozen=True)
class MeshSampling:
    r_samples: int = 64
    theta_samples: int = 128
    r_range: tuple[float, float] | None = None
    theta_range: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if not SAMPLES_MIN <= self.r_samples <= SAMPLES_MAX:
            raise DomainError(f"r_samples must lie in [{SAMPLES_MIN}, {SAMPLES_MAX}]")
        if not 3 <= self.theta_samples <= SAMPLES_MAX:
            raise DomainError(f"theta_samples must lie in [3, {SAMPLES_MAX}]")

    @classmethod
    def parse(cls, text: str) -> "MeshSampling":
        """``"RxT"``, e.g. ``"200x400"``."""
        try:
            r, t = (int(part) for part in text.lower().split("x"))
        except ValueError:
            raise DomainError(f"samples must look like RxT, got {text!r}") from None
        return cls(r, t)


def default_r_range(surface: Surface) -> tuple[float, float]:
    if isinstance(surface, (Disc, Enneper)):
        return (0.0, 1.0)
    if isinstance(surface, Sphere):
        return (0.0, math.pi * surface.S)
    if isinstance(surface, (Richmond, Bour, Catenoid, Helicoid, MobiusRuled)):
        return surface.r_domain()
    raise NoEmbeddingError(f"no embedding available for {surface.family}")


def mesh_grid(surface: Surface, sampling: MeshSampling):
    """Vertices (cm, shape ``(R*T, 3)``), 0-based triangles and the sample grids."""
    if not surface.embedded:
        raise NoEmbeddingError(f"no embedding available for {surface.family}")
    R, T = sampling.r_samples, sampling.theta_samples
    r0, r1 = sampling.r_range or default_r_range(surface)
    rs = np.linspace(r0, r1, R)
    t0, t1 = sampling.theta_range or surface.theta_domain()
    wrap = surface.closed_theta and sampling.theta_range is None
    ts = t0 + (t1 - t0) * np.arange(T) / T if wrap else np.linspace(t0, t1, T)
    rr, tt = np.meshgrid(rs, ts, indexing="ij")
    verts = surface.points(rr, tt).reshape(-1, 3)

    flip = isinstance(surface, MobiusRuled) and abs(r0 + r1) < 1e-12
    faces = []
    for i in range(R - 1):
        for j in range(T if wrap else T - 1):
            a, b = i * T + j, (i + 1) * T + j
            if j + 1 < T:
                c, d = (i + 1) * T + j + 1, i * T + j + 1
            elif flip:
                # crossing theta = pi lands on the opposite edge of the band
                c, d = (R - 2 - i) * T, (R - 1 - i) * T
            else:
                c, d = (i + 1) * T, i * T
            faces.append((a, b, c))
            faces.append((a, c, d))
    return verts, np.asarray(faces, dtype=np.int64), rs, ts


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def export_obj(surface: Surface, sampling: MeshSampling, path: str | Path | None = None) -> str:
    """ASCII Wavefront OBJ of the sampled surface; also written to ``path`` if given."""
    verts, faces, _, _ = mesh_grid(surface, sampling)
    lines = [f"# {_describe(surface)}", f"# {len(verts)} vertices, {len(faces)} triangles"]
    lines += [f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}" for x, y, z in verts]
    lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in faces]
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def parse_obj(text: str) -> tuple[np.ndarray, np.ndarray]:
    verts, faces = [], []
    for line in text.splitlines():
        if line.startswith("v "):
            verts.append([float(v) for v in line.split()[1:4]])
        elif line.startswith("f "):
            faces.append([int(v.split("/")[0]) for v in line.split()[1:4]])
    return np.asarray(verts), np.asarray(faces, dtype=np.int64)


# ---------------------------------------------------------------------------
# stitch graph


def graph_dict(graph: StitchGraph) -> dict[str, Any]:
    nodes = []
    for n in graph.nodes:
        entry: dict[str, Any] = {"round": n.round, "idx": n.index, "theta": _num(n.theta)}
        if n.xyz is not None:
            entry["xyz"] = [_num(v) for v in n.xyz]
        nodes.append(entry)
    return {
        "nodes": nodes,
        "parent_edges": [list(e) for e in graph.parent_edges],
        "lateral_edges": [list(e) for e in graph.lateral_edges],
    }


def export_graph(graph: StitchGraph, path: str | Path | None = None) -> str:
    text = json.dumps(graph_dict(graph), separators=(",", ":")) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text

