"""Input validation helpers shared by the public functions.

All indices accepted by the public API are 1-based.
"""

from __future__ import annotations

from .exceptions import DimensionMismatch, EmptyBand, IndexOutOfRange
from .scalars import MODES, coerce, infer_mode


def check_mode(mode):
    if mode is not None and mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


def check_band(values, mode=None):
    """Return ``(tuple_of_scalars, mode)``; ints and strings become ``Fraction``."""
    values = list(values)
    if not values:
        raise EmptyBand("band vector must contain at least one scalar")
    check_mode(mode)
    if mode is None:
        mode = infer_mode(v for v in values if not isinstance(v, str))
    return tuple(coerce(v, mode) for v in values), mode


def check_vector(values, n, mode, name="x"):
    values = list(values)
    if len(values) != n:
        raise DimensionMismatch(f"{name} has length {len(values)}, expected {n}")
    return tuple(coerce(v, mode) for v in values)


def check_index(i, n, name="index"):
    if isinstance(i, bool) or not isinstance(i, int):
        raise TypeError(f"{name} must be an int, got {type(i).__name__}")
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"{name}={i} outside 1..{n}")
    return i


def check_square(rows):
    """Return a list-of-lists copy of a square matrix given as nested sequences."""
    if hasattr(rows, "rows"):
        rows = rows.rows
    rows = [list(r) for r in rows]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DimensionMismatch(f"matrix is not square: row of length {len(r)}, n={n}")
    return rows
