"""Crochet patterns from parametrized surfaces and a stitch gauge."""

from .emitters import MeshSampling, export_graph, export_obj, render_csv, render_json, render_text
from .errors import (
    BracketError,
    CurvelaceError,
    DegenerateMetricError,
    DomainError,
    GaugeError,
    KnotDataError,
    NoEmbeddingError,
    NotApplicableError,
    QuadratureError,
)
from .knots import KnotEntry, load_table, min_tube_length, recommended_length, ropelength
from .numerics import differentiate, find_root, integrate, minimize_scalar
from .pattern import (
    Gauge,
    Pattern,
    RoundPlan,
    StitchGraph,
    allocate_changes,
    build_stitch_graph,
    compile_pattern,
    plan_rounds,
    stitch_count,
)
from .surfaces import (
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
    make_surface,
)

__version__ = "0.1.0"
