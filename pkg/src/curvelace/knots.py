"""Ropelength arithmetic and tube-length planning for physical knots.

Ropelength is the length of a closed tube divided by its radius. For a
knot with known minimum ropelength, the shortest tube of a given diameter
that can still be tied into it follows by simple scaling.

Only the trefoil minimum ships with the package. Bounds for other knots
can be loaded from a JSON file (``[{"name", "crossings", "min_ropelength"?}]``),
given explicitly or through the ``CURVELACE_KNOT_TABLE`` environment variable.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from .errors import DomainError, KnotDataError

ROPELENGTH_LOWER_BOUND = 31.32
TREFOIL_ROPELENGTH = 32.74
CM_PER_EXTRA_CROSSING = 10.0
ENV_VAR = "CURVELACE_KNOT_TABLE"


@dataclass(frozen=True)
class KnotEntry:
    name: str
    crossings: int
    min_ropelength: float | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.crossings, int) or isinstance(self.crossings, bool) or self.crossings < 3:
            raise KnotDataError(f"{self.name}: crossings must be an integer >= 3")
        if self.min_ropelength is not None:
            if not math.isfinite(self.min_ropelength) or self.min_ropelength <= ROPELENGTH_LOWER_BOUND:
                raise KnotDataError(
                    f"{self.name}: min_ropelength {self.min_ropelength} must exceed "
                    f"{ROPELENGTH_LOWER_BOUND}"
                )


# prime knots with at most seven crossings (Rolfsen numbering)
_CATALOG_NAMES = (
    ("3_1", 3),
    ("4_1", 4),
    ("5_1", 5), ("5_2", 5),
    ("6_1", 6), ("6_2", 6), ("6_3", 6),
    ("7_1", 7), ("7_2", 7), ("7_3", 7), ("7_4", 7), ("7_5", 7), ("7_6", 7), ("7_7", 7),
)

ALIASES = {"trefoil": "3_1", "figure-eight": "4_1", "figure_eight": "4_1"}


def builtin_table() -> Mapping[str, KnotEntry]:
    table = {
        name: KnotEntry(name, c, TREFOIL_ROPELENGTH if name == "3_1" else None)
        for name, c in _CATALOG_NAMES
    }
    return MappingProxyType(table)


def load_table(path: str | Path | None = None) -> Mapping[str, KnotEntry]:
    """Built-in catalog overlaid with entries from ``path`` (or the env var).

    File entries replace catalog entries of the same name. The result is
    read-only.
    """
    table = dict(builtin_table())
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    if path is None:
        return MappingProxyType(table)
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise KnotDataError(f"cannot read knot table {str(path)!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise KnotDataError(f"knot table {str(path)!r} is not valid JSON: {exc.msg}") from None
    if not isinstance(raw, list):
        raise KnotDataError("knot table must be a JSON array")
    for item in raw:
        if not isinstance(item, dict) or "name" not in item or "crossings" not in item:
            raise KnotDataError("knot table entries need 'name' and 'crossings'")
        bound = item.get("min_ropelength")
        entry = KnotEntry(
            str(item["name"]),
            item["crossings"],
            None if bound is None else float(bound),
        )
        table[entry.name] = entry
    return MappingProxyType(table)


def get_knot(name: str, table: Mapping[str, KnotEntry] | None = None) -> KnotEntry:
    table = builtin_table() if table is None else table
    key = ALIASES.get(name.lower(), name)
    try:
        return table[key]
    except KeyError:
        raise KnotDataError(f"unknown knot {name!r}") from None


def ropelength(length: float, radius: float) -> float:
    """Tube length divided by tube radius (dimensionless)."""
    if not (length > 0 and radius > 0) or not (math.isfinite(length) and math.isfinite(radius)):
        raise DomainError(f"invalid dimensions: length={length!r}, radius={radius!r}")
    return length / radius


def min_tube_length(knot: KnotEntry, tube_diameter: float) -> float:
    """Shortest tube (cm) of the given diameter that can be tied into ``knot``."""
    if knot.min_ropelength is None:
        raise KnotDataError(f"no bound available for knot {knot.name}")
    if not (tube_diameter > 0 and math.isfinite(tube_diameter)):
        raise DomainError(f"invalid dimensions: tube_diameter={tube_diameter!r}")
    return knot.min_ropelength * (tube_diameter / 2.0)


def recommended_length(
    knot: KnotEntry,
    tube_diameter: float,
    trefoil: KnotEntry | None = None,
) -> float:
    """Practical tube length: twice the trefoil minimum plus 10 cm per extra crossing.

    The rule is anchored on the trefoil regardless of ``knot`` and the
    10 cm step is not scaled with the diameter.
    """
    trefoil = trefoil or builtin_table()["3_1"]
    return 2.0 * min_tube_length(trefoil, tube_diameter) + CM_PER_EXTRA_CROSSING * (knot.crossings - 3)
