"""Closed-form algorithms on L-banded matrices.

Everything here works directly on the band vector ``a = [a_1, ..., a_n]``.
Two derived sequences appear throughout:

* differences ``Delta_k = a_k - a_{k+1}`` (``Delta_n = a_n``), and
* reciprocals ``delta_k = 1 / Delta_k`` with ``delta_0 = 0``, defined only
  when the matrix is invertible.

The inverse of an invertible L-banded matrix is the symmetric tridiagonal
matrix with diagonal ``delta_{i-1} + delta_i`` and off-diagonal
``-delta_i``; cofactors, column-substituted determinants and the
characteristic polynomial all follow from it.

Public indices are 1-based. Exact scalars give exact results; float
scalars use the matrix's :class:`~lbanded.scalars.ToleranceConfig` for every
zero/equality decision.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import DefinitenessClass, DenseSymMatrix, LBandedMatrix
from .exceptions import (
    NoLdlDecomposition,
    NotPositiveDefinite,
    SingularMatrix,
)
from .polynomial import Polynomial
from .scalars import (
    DEFAULT_TOL,
    FLOAT,
    ToleranceConfig,
    coerce,
    greater_equal,
    is_exact,
    is_zero,
    nonnegative,
    positive,
    scalars_equal,
    sqrt,
    strictly_greater,
)
from .validation import check_index, check_vector


# ---------------------------------------------------------------------------
# derived sequences


def delta_differences(A: LBandedMatrix) -> tuple:
    """``(Delta_1, ..., Delta_n)``; their suffix sums telescope back to the band."""
    a = A.band
    n = len(a)
    return tuple(a[k] - a[k + 1] for k in range(n - 1)) + (a[n - 1],)


def singularity(A: LBandedMatrix):
    """Return a :class:`SingularMatrix` describing why A is singular, or None."""
    a, tol = A.band, A.tol
    n = len(a)
    if is_zero(a[-1], tol):
        return SingularMatrix(f"a_{n} = 0", reason="zero_last", index=n)
    for k in range(n - 1):
        if scalars_equal(a[k], a[k + 1], tol):
            return SingularMatrix(
                f"a_{k + 1} = a_{k + 2} (equal neighbours)", reason="equal_neighbors", index=k + 1
            )
    return None


def is_invertible(A: LBandedMatrix) -> bool:
    return singularity(A) is None


def delta_coefficients(A: LBandedMatrix) -> tuple:
    """``(delta_0, delta_1, ..., delta_n)``; raises :class:`SingularMatrix`."""
    err = singularity(A)
    if err is not None:
        raise err
    a = A.band
    one = coerce(1, A.mode)
    n = len(a)
    return (one - one,) + tuple(one / (a[k] - a[k + 1]) for k in range(n - 1)) + (one / a[-1],)


# ---------------------------------------------------------------------------
# determinant and inverse


def determinant(A: LBandedMatrix):
    """``a_n * prod_{k<n} (a_k - a_{k+1})`` in O(n)."""
    a = A.band
    det = a[-1]
    for k in range(len(a) - 1):
        det *= a[k] - a[k + 1]
    return det


@dataclass(frozen=True)
class SymTridiagonal:
    """Symmetric tridiagonal matrix stored as diagonal and first off-diagonal."""

    diag: tuple
    offdiag: tuple

    @property
    def n(self) -> int:
        return len(self.diag)

    def entry(self, i: int, j: int):
        check_index(i, self.n, "i")
        check_index(j, self.n, "j")
        if i == j:
            return self.diag[i - 1]
        if abs(i - j) == 1:
            return self.offdiag[min(i, j) - 1]
        return self.diag[0] * 0

    def matvec(self, x):
        d, e = self.diag, self.offdiag
        n = len(d)
        out = [d[i] * x[i] for i in range(n)]
        for i in range(n - 1):
            out[i] += e[i] * x[i + 1]
            out[i + 1] += e[i] * x[i]
        return out

    def to_dense(self) -> DenseSymMatrix:
        n = self.n
        zero = self.diag[0] * 0
        rows = [[zero] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = self.diag[i]
        for i in range(n - 1):
            rows[i][i + 1] = rows[i + 1][i] = self.offdiag[i]
        return DenseSymMatrix(tuple(tuple(r) for r in rows))


def inverse(A: LBandedMatrix) -> SymTridiagonal:
    """Tridiagonal inverse in O(n) time and storage.

    ``inverse(from_band([3, 2, 1]))`` has diagonal ``(1, 2, 2)`` and
    off-diagonal ``(-1, -1)``.
    """
    delta = delta_coefficients(A)
    n = A.n
    diag = tuple(delta[i - 1] + delta[i] for i in range(1, n + 1))
    offdiag = tuple(-delta[i] for i in range(1, n))
    return SymTridiagonal(diag, offdiag)


# ---------------------------------------------------------------------------
# quadratic form and definiteness


def quadratic_form(A: LBandedMatrix, x):
    """``x^T A x = sum_k Delta_k (x_1 + ... + x_k)^2`` in O(n)."""
    a = A.band
    x = check_vector(x, len(a), A.mode, "x")
    n = len(a)
    total = 0 * a[0]
    prefix = 0 * a[0]
    for k in range(n):
        prefix += x[k]
        weight = a[k] - a[k + 1] if k < n - 1 else a[k]
        total += weight * prefix * prefix
    return total


def _chain(a, tol, step, last):
    return all(step(a[k], a[k + 1], tol) for k in range(len(a) - 1)) and last(a[-1], tol)


def _neg(x, tol):
    return positive(-x, tol)


def _nonpos(x, tol):
    return nonnegative(-x, tol)


def _increasing(x, y, tol):
    return strictly_greater(y, x, tol)


def _nondecreasing(x, y, tol):
    return greater_equal(y, x, tol)


def is_positive_definite(A: LBandedMatrix) -> bool:
    return _chain(A.band, A.tol, strictly_greater, positive)


def is_positive_semidefinite(A: LBandedMatrix) -> bool:
    """True iff ``a_1 >= a_2 >= ... >= a_n >= 0`` (includes the definite case)."""
    return _chain(A.band, A.tol, greater_equal, nonnegative)


def is_negative_definite(A: LBandedMatrix) -> bool:
    return _chain(A.band, A.tol, _increasing, _neg)


def is_negative_semidefinite(A: LBandedMatrix) -> bool:
    return _chain(A.band, A.tol, _nondecreasing, _nonpos)


def classify_definiteness(A: LBandedMatrix) -> DefinitenessClass:
    """Single-valued definiteness label computed from the band in O(n).

    Strict classes win over semidefinite ones; the zero matrix is reported as
    positive semidefinite.
    """
    if is_positive_definite(A):
        return DefinitenessClass.POSITIVE_DEFINITE
    if is_positive_semidefinite(A):
        return DefinitenessClass.POSITIVE_SEMIDEFINITE
    if is_negative_definite(A):
        return DefinitenessClass.NEGATIVE_DEFINITE
    if is_negative_semidefinite(A):
        return DefinitenessClass.NEGATIVE_SEMIDEFINITE
    return DefinitenessClass.INDEFINITE


# ---------------------------------------------------------------------------
# LDL and Cholesky


def _last_nonzero(a, tol) -> int:
    """1-based index p of the last nonzero band entry; 0 if all are zero."""
    for k in range(len(a) - 1, -1, -1):
        if not is_zero(a[k], tol):
            return k + 1
    return 0


def ldl_exists(A: LBandedMatrix) -> bool:
    a, tol = A.band, A.tol
    p = _last_nonzero(a, tol)
    return all(not is_zero(a[k], tol) for k in range(p - 1))


def ldl_is_unique(A: LBandedMatrix) -> bool:
    """Sufficient condition for a unique LDL factorization.

    Every leading principal submatrix of order < n must be invertible, i.e.
    ``a_i != 0`` for i < n and ``a_{j-1} != a_j`` for 2 <= j <= n-1.
    """
    a, tol = A.band, A.tol
    n = len(a)
    return all(not is_zero(a[i], tol) for i in range(n - 1)) and all(
        not scalars_equal(a[j - 1], a[j], tol) for j in range(1, n - 1)
    )


def _ldl_pivots(a, p):
    zero = a[0] * 0
    d = []
    for k in range(p):
        d.append(a[0] if k == 0 else a[k] / a[k - 1] * (a[k - 1] - a[k]))
    d.extend([zero] * (len(a) - p))
    return tuple(d)


@dataclass(frozen=True)
class LdlFactors:
    """``A = L diag(d) L^T`` with ``L[i, j] = a_i / a_j`` below the diagonal.

    When the band ends in zeros (``a_{p+1} = ... = a_n = 0``), L is the block
    matrix ``[[L_p, 0], [0, I]]`` and ``d`` is zero past index p.
    """

    band: tuple
    d: tuple
    p: int

    @property
    def n(self) -> int:
        return len(self.band)

    def l_entry(self, i: int, j: int):
        check_index(i, self.n, "i")
        check_index(j, self.n, "j")
        one = self.band[0] * 0 + 1
        if i == j:
            return one
        if i < j or j > self.p:
            return one - one
        return self.band[i - 1] / self.band[j - 1]

    def dense_l(self):
        a, p, n = self.band, self.p, self.n
        one = a[0] * 0 + 1
        zero = one - one
        rows = []
        for i in range(n):
            ai = a[i]
            row = [ai / a[j] if j < p else zero for j in range(i)]
            row.append(one)
            row.extend([zero] * (n - i - 1))
            rows.append(row)
        return rows

    def dense_d(self):
        n = self.n
        zero = self.band[0] * 0
        return [[self.d[i] if i == j else zero for j in range(n)] for i in range(n)]

    def reconstruct(self):
        """Dense ``L diag(d) L^T``."""
        L = self.dense_l()
        n = self.n
        return [
            [sum(L[i][k] * self.d[k] * L[j][k] for k in range(min(i, j) + 1)) for j in range(n)]
            for i in range(n)
        ]


def ldl_decompose(A: LBandedMatrix) -> LdlFactors:
    """Closed-form LDL factors in O(n); the dense L costs O(n^2) on demand."""
    if not ldl_exists(A):
        raise NoLdlDecomposition(
            "an interior band entry a_k (k < p) is zero, so no LDL factorization exists"
        )
    p = _last_nonzero(A.band, A.tol)
    return LdlFactors(A.band, _ldl_pivots(A.band, p), p)


@dataclass(frozen=True)
class CholeskyFactor:
    """Lower-triangular ``Lhat`` with ``Lhat[i, j] = (a_i / a_j) * sqrt(d_j)``."""

    band: tuple
    d: tuple
    tol: ToleranceConfig = field(default=DEFAULT_TOL, compare=False)

    @property
    def n(self) -> int:
        return len(self.band)

    def entry(self, i: int, j: int):
        check_index(i, self.n, "i")
        check_index(j, self.n, "j")
        if i < j:
            return self.band[0] * 0
        return self.band[i - 1] / self.band[j - 1] * sqrt(self.d[j - 1])

    def diagonal(self):
        return [sqrt(dj) for dj in self.d]

    def dense(self):
        a, n = self.band, self.n
        roots = [sqrt(dj) for dj in self.d]
        zero = roots[0] * 0
        rows = []
        for i in range(n):
            ai = a[i]
            row = [ai / a[j] * roots[j] for j in range(i + 1)]
            row.extend([zero] * (n - i - 1))
            rows.append(row)
        return rows

    def reconstruct(self):
        """Dense ``Lhat Lhat^T``.

        With exact scalars the product is formed on the factored entries
        (``sqrt(d_j)^2 = d_j``) so the result stays exact.
        """
        n = self.n
        if all(is_exact(x) for x in self.band):
            a, d = self.band, self.d
            return [
                [
                    sum(a[i] / a[k] * (a[j] / a[k]) * d[k] for k in range(min(i, j) + 1))
                    for j in range(n)
                ]
                for i in range(n)
            ]
        L = self.dense()
        return [
            [sum(L[i][k] * L[j][k] for k in range(min(i, j) + 1)) for j in range(n)]
            for i in range(n)
        ]


def cholesky_decompose(A: LBandedMatrix) -> CholeskyFactor:
    if not is_positive_definite(A):
        raise NotPositiveDefinite("Cholesky needs a_1 > a_2 > ... > a_n > 0")
    return CholeskyFactor(A.band, _ldl_pivots(A.band, A.n), A.tol)


# ---------------------------------------------------------------------------
# cofactors, minors, column substitution


def cofactor(A: LBandedMatrix, i: int, j: int):
    """(i, j) cofactor ``|A| * inverse(A)[i, j]``; requires invertibility."""
    check_index(i, A.n, "i")
    check_index(j, A.n, "j")
    delta = delta_coefficients(A)
    if abs(i - j) > 1:
        return delta[0]
    det = determinant(A)
    if i == j:
        return (delta[i - 1] + delta[i]) * det
    return -delta[min(i, j)] * det


def minor(A: LBandedMatrix, i: int, j: int):
    c = cofactor(A, i, j)
    return c if (i + j) % 2 == 0 else -c


def cofactor_matrix(A: LBandedMatrix):
    """All n^2 cofactors as a dense list of lists, O(n^2)."""
    inv = inverse(A)
    det = determinant(A)
    n = A.n
    zero = det * 0
    rows = [[zero] * n for _ in range(n)]
    for k in range(n):
        rows[k][k] = inv.diag[k] * det
    for k in range(n - 1):
        rows[k][k + 1] = rows[k + 1][k] = inv.offdiag[k] * det
    return rows


def det_column_substituted(A: LBandedMatrix, k: int, b):
    """Determinant of A with column k replaced by ``b`` (Cramer numerator)."""
    n = A.n
    check_index(k, n, "k")
    b = check_vector(b, n, A.mode, "b")
    delta = delta_coefficients(A)
    g = delta[k] * (b[k - 1] - (b[k] if k < n else 0))
    if k > 1:
        g += delta[k - 1] * (b[k - 1] - b[k - 2])
    return g * determinant(A)


# ---------------------------------------------------------------------------
# characteristic polynomial


def _poly_axpy(out, scale, poly, shift):
    """out += scale * x^shift * poly (in place, dense coefficient lists)."""
    for m, c in enumerate(poly):
        out[m + shift] += scale * c


def characteristic_polynomial(A: LBandedMatrix) -> Polynomial:
    """``det(x I - A)`` via the three-term recurrence on ``x A^{-1} - I``.

    ``f_0 = 1``, ``f_1 = delta_1 x - 1`` and
    ``f_k = ((delta_{k-1} + delta_k) x - 1) f_{k-1} - delta_{k-1}^2 x^2 f_{k-2}``;
    the result is ``|A| f_n``. O(n^2) coefficient operations.
    """
    delta = delta_coefficients(A)
    n = A.n
    one = coerce(1, A.mode)
    zero = one - one
    f_prev2 = None
    f_prev = [one]
    for k in range(1, n + 1):
        cur = [zero] * (k + 1)
        _poly_axpy(cur, -one, f_prev, 0)
        _poly_axpy(cur, delta[k - 1] + delta[k], f_prev, 1)
        if k >= 2:
            _poly_axpy(cur, -delta[k - 1] * delta[k - 1], f_prev2, 2)
        f_prev2, f_prev = f_prev, cur
    det = determinant(A)
    return Polynomial(tuple(det * c for c in f_prev))


def characteristic_polynomial_at(A: LBandedMatrix, x):
    """Value of ``det(x I - A)`` at one point, in O(n) without expanding coefficients.

    Runs the same recurrence on ``g_k = (Delta_1 ... Delta_k) f_k(x)``:
    ``g_k = ((delta_{k-1} Delta_k + 1) x - Delta_k) g_{k-1}
    - Delta_k delta_{k-1} x^2 g_{k-2}``, whose last term is ``|A| f_n(x)``.
    In floating point this is far better conditioned than Horner evaluation
    of the monomial coefficients, which cancels catastrophically once n is
    in the tens.
    """
    delta = delta_coefficients(A)
    diffs = delta_differences(A)
    if A.mode != FLOAT:
        x = coerce(x, A.mode)
    g_prev2 = None
    g_prev = coerce(1, A.mode)
    for k in range(1, A.n + 1):
        dk = diffs[k - 1]
        g = ((delta[k - 1] * dk + 1) * x - dk) * g_prev
        if k >= 2:
            g -= dk * delta[k - 1] * x * x * g_prev2
        g_prev2, g_prev = g_prev, g
    return g_prev


# ---------------------------------------------------------------------------
# structured products


def structured_upper_matrix(h):
    """Dense H with ``H[i, j] = h_j`` above the diagonal, ``h_1 + ... + h_j`` on it."""
    h = list(h)
    n = len(h)
    zero = h[0] * 0
    rows = [[zero] * n for _ in range(n)]
    acc = zero
    for j in range(n):
        acc += h[j]
        rows[j][j] = acc
        for i in range(j):
            rows[i][j] = h[j]
    return rows


def left_multiply_structured_upper(h, A: LBandedMatrix) -> LBandedMatrix:
    """Band of ``H A`` where H is :func:`structured_upper_matrix` of ``h``.

    ``q_t = a_t (h_1 + ... + h_t) + sum_{k > t} h_k a_k`` in O(n) via a
    suffix sum.
    """
    a = A.band
    n = len(a)
    h = check_vector(h, n, A.mode, "h")
    suffix = [a[0] * 0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + h[k] * a[k]
    q = []
    prefix = a[0] * 0
    for t in range(n):
        prefix += h[t]
        q.append(a[t] * prefix + suffix[t + 1])
    return LBandedMatrix(tuple(q), A.tol)


def square(A: LBandedMatrix) -> DenseSymMatrix:
    """Dense ``A @ A`` from prefix/suffix sums in O(n^2).

    ``(A^2)[i, j] = a_t (m a_m + a_{m+1} + ... + a_t) + sum_{k > t} a_k^2``
    with ``m = min(i, j)`` and ``t = max(i, j)``.
    """
    a = A.band
    n = len(a)
    zero = a[0] * 0
    prefix = [zero] * (n + 1)  # prefix[k] = a_1 + ... + a_k
    tail_sq = [zero] * (n + 1)  # tail_sq[k] = a_{k+1}^2 + ... + a_n^2
    for k in range(n):
        prefix[k + 1] = prefix[k] + a[k]
    for k in range(n - 1, -1, -1):
        tail_sq[k] = tail_sq[k + 1] + a[k] * a[k]
    rows = [[zero] * n for _ in range(n)]
    for m in range(1, n + 1):
        head = m * a[m - 1] - prefix[m]
        for t in range(m, n + 1):
            val = a[t - 1] * (head + prefix[t]) + tail_sq[t]
            rows[m - 1][t - 1] = rows[t - 1][m - 1] = val
    return DenseSymMatrix(tuple(tuple(r) for r in rows), A.tol)


def row_sums_of_inverse(A: LBandedMatrix):
    """``A^{-1} 1`` computed from the tridiagonal inverse."""
    inv = inverse(A)
    return inv.matvec([coerce(1, A.mode)] * A.n)


__all__ = [
    "SymTridiagonal",
    "LdlFactors",
    "CholeskyFactor",
    "delta_differences",
    "delta_coefficients",
    "singularity",
    "is_invertible",
    "determinant",
    "inverse",
    "quadratic_form",
    "is_positive_definite",
    "is_positive_semidefinite",
    "is_negative_definite",
    "is_negative_semidefinite",
    "classify_definiteness",
    "ldl_exists",
    "ldl_is_unique",
    "ldl_decompose",
    "cholesky_decompose",
    "cofactor",
    "minor",
    "cofactor_matrix",
    "det_column_substituted",
    "characteristic_polynomial",
    "characteristic_polynomial_at",
    "structured_upper_matrix",
    "left_multiply_structured_upper",
    "square",
    "row_sums_of_inverse",
]
