"""``curvelace`` command line: pattern, mesh, knot and verify subcommands.

Exit codes: 0 success, 1 failed verification, 2 bad usage or invalid input.
Output is deterministic: no timestamps and locale-independent number format.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .emitters import MeshSampling, default_r_range, export_obj, render_csv, render_json, render_text
from .errors import CurvelaceError
from .knots import get_knot, load_table, min_tube_length, recommended_length
from .pattern import Gauge, compile_pattern
from .surfaces import FAMILIES, make_surface
from .verification import SUITES, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# flag dest -> surface field name
SURFACE_FLAGS = {
    "n": "n", "S": "S", "r_min": "r_min", "r_max": "r_max",
    "c": "c", "turns": "turns", "half_width": "half_width", "scale": "scale",
}
RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 as well; keep messages uniform
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_surface_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--surface", choices=sorted(FAMILIES), help="surface family")
    p.add_argument("--n", type=int, help="symmetry order (enneper, richmond)")
    p.add_argument("--S", type=float, help="radius of curvature (sphere, hyperbolic)")
    p.add_argument("--r-min", type=float, help="inner parameter bound (richmond)")
    p.add_argument("--r-max", type=float, help="outer parameter bound")
    p.add_argument("--c", type=float, help="neck radius / pitch (catenoid, helicoid)")
    p.add_argument("--turns", type=int, help="helicoid turns")
    p.add_argument("--half-width", type=float, help="moebius band half-width")
    p.add_argument("--scale", type=float, help="uniform scale in cm (default 1)")
    p.add_argument("--config", help="JSON file with default values for these flags")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curvelace", description="Crochet patterns from parametrized surfaces.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("pattern", help="round-by-round instructions")
    _add_surface_flags(p)
    p.add_argument("--gauge", help="stitch width x height in cm, e.g. 0.5x0.4")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--rounds", type=int, help="number of rounds")
    group.add_argument("--stop-radius", type=float, help="stop at this intrinsic radius (cm)")
    p.add_argument("--format", choices=sorted(RENDERERS), help="output format (default text)")
    p.add_argument("--out", help="write to this file instead of stdout")

    m = sub.add_parser("mesh", help="OBJ mesh of a surface")
    _add_surface_flags(m)
    m.add_argument("--samples", help="r x theta sample counts, e.g. 200x400")
    m.add_argument("--out", help="write to this file instead of stdout")

    k = sub.add_parser("knot", help="tube length for a knot")
    k.add_argument("--name", help="catalog name such as 3_1, or 'trefoil'")
    k.add_argument("--tube-diameter", type=float, help="tube diameter in cm")
    k.add_argument("--recommended", action="store_true", default=None,
                   help="also print the practical recommended length")
    k.add_argument("--knot-table", help="JSON knot table (else $CURVELACE_KNOT_TABLE)")
    k.add_argument("--config", help="JSON file with default values for these flags")

    v = sub.add_parser("verify", help="run the built-in oracle checks")
    v.add_argument("--suite", action="append", choices=sorted(SUITES),
                   help="run only this suite (repeatable)")
    return parser


def _merge_config(args: argparse.Namespace) -> dict[str, Any]:
    """Flags that were given override values from ``--config``."""
    values = {k: v for k, v in vars(args).items() if v is not None}
    path = values.pop("config", None)
    if path is None:
        return values
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path!r} is not valid JSON: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise UsageError("config must be a JSON object")
    known = set(vars(args))
    merged: dict[str, Any] = {}
    for key, value in raw.items():
        dest = key.replace("-", "_")
        if dest not in known or dest in ("command", "config"):
            raise UsageError(f"unknown config key {key!r}")
        merged[dest] = value
    merged.update(values)
    return merged


def _surface(opts: dict[str, Any], *, mesh: bool = False):
    family = opts.get("surface")
    if family is None:
        raise UsageError("--surface is required")
    if family not in FAMILIES:
        raise UsageError(f"unknown surface {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    fields = {f.name for f in dataclasses.fields(FAMILIES[family])}
    params: dict[str, Any] = {}
    extra: dict[str, Any] = {}
    for dest, name in SURFACE_FLAGS.items():
        if dest not in opts:
            continue
        if name in fields:
            params[name] = opts[dest]
        elif mesh and dest == "r_max":
            extra["r_max"] = opts[dest]
        else:
            raise UsageError(f"--{dest.replace('_', '-')} does not apply to {family}")
    return make_surface(family, **params), extra


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_pattern(opts: dict[str, Any]) -> int:
    surface, _ = _surface(opts)
    if "gauge" not in opts:
        raise UsageError("--gauge is required")
    if "rounds" in opts and "stop_radius" in opts:
        raise UsageError("give either --rounds or --stop-radius, not both")
    gauge = Gauge.parse(str(opts["gauge"]))
    pattern = compile_pattern(surface, gauge, opts.get("rounds"), opts.get("stop_radius"))
    fmt = opts.get("format", "text")
    if fmt not in RENDERERS:
        raise UsageError(f"unknown format {fmt!r}")
    _emit(RENDERERS[fmt](pattern), opts.get("out"))
    return EXIT_OK


def cmd_mesh(opts: dict[str, Any]) -> int:
    surface, extra = _surface(opts, mesh=True)
    sampling = MeshSampling.parse(str(opts["samples"])) if "samples" in opts else MeshSampling()
    if "r_max" in extra:
        r0 = default_r_range(surface)[0]
        sampling = dataclasses.replace(sampling, r_range=(r0, extra["r_max"]))
    _emit(export_obj(surface, sampling), opts.get("out"))
    return EXIT_OK


def cmd_knot(opts: dict[str, Any]) -> int:
    if "name" not in opts or "tube_diameter" not in opts:
        raise UsageError("--name and --tube-diameter are required")
    table = load_table(opts.get("knot_table"))
    knot = get_knot(str(opts["name"]), table)
    d = float(opts["tube_diameter"])
    lines = [f"{knot.name}: tube diameter {d:.2f} cm"]
    if knot.min_ropelength is not None:
        lines.append(f"{min_tube_length(knot, d):.2f} cm minimum")
    elif not opts.get("recommended"):
        min_tube_length(knot, d)  # raises "no bound available"
    if opts.get("recommended"):
        lines.append(f"{recommended_length(knot, d, table['3_1']):.2f} cm recommended")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(opts: dict[str, Any]) -> int:
    results = run_all(opts.get("suite"))
    for check in results:
        sys.stdout.write(check.line() + "\n")
    failed = sum(not c.passed for c in results)
    sys.stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"pattern": cmd_pattern, "mesh": cmd_mesh, "knot": cmd_knot, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        opts = _merge_config(args)
        return COMMANDS[args.command](opts)
    except UsageError as exc:
        sys.stderr.write(f"curvelace: error: {exc}\n")
        return EXIT_USAGE
    except (CurvelaceError, ValueError, TypeError) as exc:
        sys.stderr.write(f"curvelace: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
