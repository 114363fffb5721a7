"""Exact tropical descendant invariants of the plane."""

from fractions import Fraction

from . import _core
from ._core import (
    CacheError,
    DomainError,
    Error,
    InsufficientDataError,
    ParseError,
    ProfileError,
    canonical_key,
)

__all__ = [
    "CacheError",
    "Context",
    "DomainError",
    "Error",
    "InsufficientDataError",
    "ParseError",
    "ProfileError",
    "canonical_key",
    "compute",
    "kontsevich_n",
    "line_psi_line",
    "lookup",
    "n",
    "oracle_built",
    "psi_line",
    "psi_line_line",
    "psi_point",
    "relative",
    "validate",
]

Context = _core.Context
oracle_built = _core.oracle_built

_default = None


def _ctx(ctx):
    global _default
    if ctx is not None:
        return ctx
    if _default is None:
        _default = Context()
    return _default


def compute(key, ctx=None):
    """Value and provenance ("computed", "table" or "oracle") of an invariant key."""
    value, source = _core.compute(_ctx(ctx), key)
    return Fraction(value), source


def lookup(key, ctx=None):
    """Like compute, but None when the key has no value."""
    found = _core.lookup(_ctx(ctx), key)
    if found is None:
        return None
    return Fraction(found[0]), found[1]


def kontsevich_n(d):
    return Fraction(_core.kontsevich_n(d))


def n(d, ctx=None):
    return Fraction(_core.n(_ctx(ctx), d))


def relative(d, fixed=(), free=(), ctx=None):
    return Fraction(_core.relative(_ctx(ctx), d, list(fixed), list(free)))


def psi_point(d, k, ctx=None):
    return Fraction(_core.psi_point(_ctx(ctx), d, k))


def psi_line(d, k, ctx=None):
    return Fraction(_core.psi_line(_ctx(ctx), d, k))


def psi_line_line(d, ctx=None):
    return Fraction(_core.psi_line_line(_ctx(ctx), d))


def line_psi_line(d, k, ctx=None):
    return Fraction(_core.line_psi_line(_ctx(ctx), d, k))


def validate(suite="all", ctx=None):
    return _core.validate(_ctx(ctx), suite)
