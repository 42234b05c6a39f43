"""Scalar contract: exact rationals (``Fraction``) or double-precision floats.

The mode of a value is decided by its Python type. Integers and
``Fraction`` are exact; ``float`` (and numpy floating scalars) use the
tolerances in :class:`ToleranceConfig`.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction

RATIONAL = "rational"
FLOAT = "float"
MODES = (RATIONAL, FLOAT)


@dataclass(frozen=True)
class ToleranceConfig:
    """Float-mode comparison tolerances. Ignored for exact scalars."""

    eq_tol: float = 1e-12
    zero_tol: float = 1e-12

    def __post_init__(self):
        if not (self.eq_tol > 0 and self.zero_tol > 0):
            raise ValueError("eq_tol and zero_tol must be strictly positive")


DEFAULT_TOL = ToleranceConfig()


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def infer_mode(values) -> str:
    """``"float"`` if any value is inexact, else ``"rational"``."""
    for v in values:
        if isinstance(v, numbers.Real) and not isinstance(v, numbers.Rational):
            return FLOAT
    return RATIONAL


def parse_scalar(text: str, mode: str = RATIONAL):
    """Parse ``"3/2"``, ``"1.5"``, ``"-2"`` or ``"1e-3"`` into a scalar of ``mode``."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    if mode == FLOAT:
        return _finite(float(Fraction(s)) if "/" in s else float(s))
    return Fraction(s)


def _finite(x: float) -> float:
    if not math.isfinite(x):
        raise ValueError(f"scalars must be finite, got {x!r}")
    return x


def coerce(x, mode: str):
    if mode == FLOAT:
        if isinstance(x, str):
            return parse_scalar(x, FLOAT)
        return _finite(float(x))
    if mode != RATIONAL:
        raise ValueError(f"unknown scalar mode {mode!r}")
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    if isinstance(x, numbers.Real):
        # exact binary value of the float
        return Fraction(float(x))
    raise TypeError(f"cannot use {type(x).__name__} as a scalar")


def is_zero(x, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    if is_exact(x):
        return x == 0
    return abs(x) <= tol.zero_tol


def scalars_equal(x, y, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Exact equality for rationals, relative-with-absolute-fallback for floats."""
    if is_exact(x) and is_exact(y):
        return x == y
    return abs(x - y) <= max(tol.eq_tol * max(abs(x), abs(y)), tol.zero_tol)


def strictly_greater(x, y, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    return x > y and not scalars_equal(x, y, tol)


def greater_equal(x, y, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    return x > y or scalars_equal(x, y, tol)


def positive(x, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    return x > 0 and not is_zero(x, tol)


def nonnegative(x, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    return x > 0 or is_zero(x, tol)


def sqrt(x):
    """Square root; stays exact when ``x`` is the square of a rational."""
    if x < 0:
        raise ValueError("square root of a negative scalar")
    if is_exact(x):
        x = Fraction(x)
        num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
        if num * num == x.numerator and den * den == x.denominator:
            return Fraction(num, den)
        return math.sqrt(x)
    return math.sqrt(x)


def format_scalar(x) -> str:
    """Lossless text: ``"p/q"`` for rationals, shortest round-trip for floats."""
    if is_exact(x):
        return str(Fraction(x))
    return repr(float(x))


def to_json_scalar(x):
    """JSON value: strings for rationals, plain numbers for floats."""
    if is_exact(x):
        return str(Fraction(x))
    return float(x)
