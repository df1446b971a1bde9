"""Exception types raised across the package."""

from __future__ import annotations


class CurvelaceError(Exception):
    """Base class for all package errors."""


class QuadratureError(CurvelaceError, RuntimeError):
    pass


class BracketError(CurvelaceError, ValueError):
    pass


class DomainError(CurvelaceError, ValueError):
    """A parameter, radius or option lies outside what a surface supports."""


class NoEmbeddingError(CurvelaceError, ValueError):
    pass


class DegenerateMetricError(CurvelaceError, ArithmeticError):
    pass


class NotApplicableError(CurvelaceError, TypeError):
    pass


class GaugeError(CurvelaceError, ValueError):
    """Stitch gauge is invalid or cannot realise the requested growth."""


class KnotDataError(CurvelaceError, ValueError):
    pass
