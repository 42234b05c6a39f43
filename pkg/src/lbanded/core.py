"""L-banded matrix type, dense symmetric matrices and conversions between them.

An n x n L-banded matrix has entry (i, j) equal to ``a[max(i, j)]``, so the
band vector ``[a_1, ..., a_n]`` is the whole matrix::

    [[a1, a2, a3],
     [a2, a2, a3],
     [a3, a3, a3]]
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .exceptions import DimensionMismatch, NotLBanded
from .scalars import (
    DEFAULT_TOL,
    FLOAT,
    RATIONAL,
    ToleranceConfig,
    coerce,
    infer_mode,
    is_exact,
    scalars_equal,
)
from .validation import check_band, check_index, check_mode, check_square


class DefinitenessClass(str, enum.Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    POSITIVE_SEMIDEFINITE = "PositiveSemiDefinite"
    NEGATIVE_DEFINITE = "NegativeDefinite"
    NEGATIVE_SEMIDEFINITE = "NegativeSemiDefinite"
    INDEFINITE = "Indefinite"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class LBandedMatrix:
    """Immutable L-banded matrix stored as its band vector.

    Use :func:`from_band` to build one from arbitrary input; the constructor
    expects an already-coerced tuple.
    """

    band: tuple
    tol: ToleranceConfig = field(default=DEFAULT_TOL, compare=False)

    @property
    def n(self) -> int:
        return len(self.band)

    @property
    def mode(self) -> str:
        return RATIONAL if all(is_exact(a) for a in self.band) else FLOAT

    def __len__(self):
        return len(self.band)

    def entry(self, i: int, j: int):
        return entry(self, i, j)

    def to_dense(self) -> "DenseSymMatrix":
        return to_dense(self)

    def __repr__(self):
        return f"LBandedMatrix({[str(a) for a in self.band]})"


@dataclass(frozen=True)
class DenseSymMatrix:
    """Fully stored symmetric matrix (both triangles), rows as tuples."""

    rows: tuple
    tol: ToleranceConfig = field(default=DEFAULT_TOL, compare=False)

    @classmethod
    def from_rows(cls, rows, mode=None, tol: ToleranceConfig = DEFAULT_TOL, check=True):
        rows = check_square(rows)
        check_mode(mode)
        if mode is None:
            mode = infer_mode(x for r in rows for x in r if not isinstance(x, str))
        rows = tuple(tuple(coerce(x, mode) for x in r) for r in rows)
        if check:
            n = len(rows)
            for i in range(n):
                for j in range(i + 1, n):
                    if not scalars_equal(rows[i][j], rows[j][i], tol):
                        raise ValueError(f"matrix is not symmetric at ({i + 1}, {j + 1})")
        return cls(rows, tol)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self):
        return [list(r) for r in self.rows]


def from_band(band, mode=None, tol: ToleranceConfig = DEFAULT_TOL) -> LBandedMatrix:
    """Build an L-banded matrix from ``[a_1, ..., a_n]``.

    ``mode`` is ``"rational"`` or ``"float"``; by default it is inferred
    (any float present means float mode). Raises :class:`EmptyBand` for an
    empty vector.
    """
    values, _ = check_band(band, mode)
    return LBandedMatrix(values, tol)


def entry(A: LBandedMatrix, i: int, j: int):
    check_index(i, A.n, "i")
    check_index(j, A.n, "j")
    return A.band[max(i, j) - 1]


def to_dense(A: LBandedMatrix) -> DenseSymMatrix:
    a = A.band
    n = len(a)
    rows = tuple(tuple(a[max(i, j)] for j in range(n)) for i in range(n))
    return DenseSymMatrix(rows, A.tol)


def band_deviation(M) -> object:
    """Largest |M[i][j] - M[t][t]|, t = max(i, j); zero iff M is L-banded."""
    rows = check_square(M)
    n = len(rows)
    worst = 0
    for i in range(n):
        for j in range(n):
            t = max(i, j)
            d = abs(rows[i][j] - rows[t][t])
            if d > worst:
                worst = d
    return worst


def detect_l_banded(M, tol: ToleranceConfig | None = None) -> LBandedMatrix:
    """Recover the band of a dense matrix, or raise :class:`NotLBanded`.

    Entries are scanned row by row; the first (i, j) whose value differs from
    the diagonal entry at ``max(i, j)`` is reported.
    """
    if tol is None:
        tol = getattr(M, "tol", DEFAULT_TOL)
    rows = check_square(M)
    n = len(rows)
    for i in range(n):
        for j in range(n):
            t = max(i, j)
            if not scalars_equal(rows[i][j], rows[t][t], tol):
                raise NotLBanded(i + 1, j + 1, abs(rows[i][j] - rows[t][t]))
    return LBandedMatrix(tuple(rows[k][k] for k in range(n)), tol)


def linear_combination(terms) -> LBandedMatrix:
    """``sum(c * A for c, A in terms)``, computed on the band vectors."""
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combination needs at least one term")
    n = terms[0][1].n
    for _, A in terms:
        if A.n != n:
            raise DimensionMismatch(f"dimension {A.n} does not match {n}")
    mode = RATIONAL
    if any(m.mode == FLOAT for _, m in terms) or infer_mode(c for c, _ in terms) == FLOAT:
        mode = FLOAT
    out = [coerce(0, mode)] * n
    for c, A in terms:
        c = coerce(c, mode)
        out = [s + c * coerce(a, mode) for s, a in zip(out, A.band)]
    return LBandedMatrix(tuple(out), terms[0][1].tol)


def leading_principal_submatrix(A: LBandedMatrix, k: int) -> LBandedMatrix:
    check_index(k, A.n, "k")
    return LBandedMatrix(A.band[:k], A.tol)


# dense helpers shared by the oracles and the damping code


def identity(n: int, one=1):
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(X, Y):
    X, Y = check_square(X), check_square(Y)
    n = len(X)
    if len(Y) != n:
        raise DimensionMismatch(f"cannot multiply {n}x{n} by {len(Y)}x{len(Y)}")
    cols = list(zip(*Y))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in X]


def matvec(X, v):
    return [sum(x * y for x, y in zip(row, v)) for row in check_square(X)]


def max_abs_diff(X, Y):
    return max(
        (abs(x - y) for rx, ry in zip(check_square(X), check_square(Y)) for x, y in zip(rx, ry)),
        default=0,
    )
