"""Brute-force dense reference implementations.

These routines only know about square matrices given as nested sequences
(or :class:`~lbanded.core.DenseSymMatrix`). They never call the closed-form
code in :mod:`lbanded.ops`, so agreement between the two is evidence rather
than a tautology. Exact inputs (int / Fraction) give exact outputs.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import (
    IndexOutOfRange,
    NoConvergence,
    NoLdlDecomposition,
    NotPositiveDefinite,
    SingularMatrix,
)
from .polynomial import Polynomial
from .scalars import DEFAULT_TOL, ToleranceConfig, format_scalar, is_exact
from .validation import check_square


def _all_exact(rows):
    return all(is_exact(x) for r in rows for x in r)


def _as_integers(rows):
    """Integer copy of the matrix if every entry is integral, else None."""
    out = []
    for r in rows:
        row = []
        for x in r:
            if isinstance(x, int):
                row.append(x)
            elif isinstance(x, Fraction) and x.denominator == 1:
                row.append(x.numerator)
            else:
                return None
        out.append(row)
    return out


def dense_determinant(M):
    """Fraction-free (Bareiss) elimination determinant, O(n^3).

    Integer matrices are eliminated with exact integer division; other exact
    matrices in ``Fraction``; floats use partial pivoting.
    """
    rows = check_square(M)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    exact = _all_exact(rows)
    ints = _as_integers(rows) if exact else None
    if ints is not None:
        rows = ints
    elif exact:
        rows = [[Fraction(x) for x in r] for r in rows]
    else:
        rows = [[float(x) for x in r] for r in rows]

    sign = 1
    prev = 1
    for k in range(n - 1):
        if exact:
            piv = next((r for r in range(k, n) if rows[r][k] != 0), None)
        else:
            piv = max(range(k, n), key=lambda r: abs(rows[r][k]))
            if rows[piv][k] == 0:
                piv = None
        if piv is None:
            return Fraction(0) if exact else 0.0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pk = rows[k]
        akk = pk[k]
        for i in range(k + 1, n):
            ri = rows[i]
            aik = ri[k]
            if ints is not None:
                for j in range(k + 1, n):
                    ri[j] = (ri[j] * akk - aik * pk[j]) // prev
            else:
                for j in range(k + 1, n):
                    ri[j] = (ri[j] * akk - aik * pk[j]) / prev
        prev = akk
    det = sign * rows[n - 1][n - 1]
    return Fraction(det) if exact else det


def _pivot_row(rows, k, exact):
    n = len(rows)
    if exact:
        return next((r for r in range(k, n) if rows[r][k] != 0), None)
    piv = max(range(k, n), key=lambda r: abs(rows[r][k]))
    return piv


def _normalise(rows):
    if _all_exact(rows):
        return [[Fraction(x) for x in r] for r in rows], True
    return [[float(x) for x in r] for r in rows], False


def _float_singular(pivot, scale, tol):
    return abs(pivot) <= tol.zero_tol * max(scale, 1.0)


def dense_inverse(M, tol: ToleranceConfig = DEFAULT_TOL):
    """Gauss-Jordan inverse as a list of lists; raises :class:`SingularMatrix`."""
    rows, exact = _normalise(check_square(M))
    n = len(rows)
    one = Fraction(1) if exact else 1.0
    zero = one - one
    scale = max((abs(x) for r in rows for x in r), default=0)
    aug = [r + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    for k in range(n):
        piv = _pivot_row(aug, k, exact)
        if piv is None or (not exact and _float_singular(aug[piv][k], scale, tol)):
            raise SingularMatrix(f"no pivot in column {k + 1}")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv_p = one / aug[k][k]
        aug[k] = [x * inv_p for x in aug[k]]
        pk = aug[k]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], pk)]
    return [r[n:] for r in aug]


def dense_solve(M, b, tol: ToleranceConfig = DEFAULT_TOL):
    """Solve ``M y = b`` by Gaussian elimination with back substitution."""
    rows, exact = _normalise(check_square(M))
    n = len(rows)
    if len(b) != n:
        raise ValueError(f"right-hand side has length {len(b)}, expected {n}")
    if exact and all(is_exact(x) for x in b):
        rhs = [Fraction(x) for x in b]
    else:
        exact = False
        rows = [[float(x) for x in r] for r in rows]
        rhs = [float(x) for x in b]
    scale = max((abs(x) for r in rows for x in r), default=0)
    for k in range(n):
        piv = _pivot_row(rows, k, exact)
        if piv is None or (not exact and _float_singular(rows[piv][k], scale, tol)):
            raise SingularMatrix(f"no pivot in column {k + 1}")
        rows[k], rows[piv] = rows[piv], rows[k]
        rhs[k], rhs[piv] = rhs[piv], rhs[k]
        pk = rows[k]
        for i in range(k + 1, n):
            f = rows[i][k] / pk[k]
            if f != 0:
                ri = rows[i]
                for j in range(k, n):
                    ri[j] -= f * pk[j]
                rhs[i] -= f * rhs[k]
    y = [rhs[0] * 0] * n
    for i in range(n - 1, -1, -1):
        acc = rhs[i] - sum(rows[i][j] * y[j] for j in range(i + 1, n))
        y[i] = acc / rows[i][i]
    return y


def dense_charpoly(M) -> Polynomial:
    """Faddeev-LeVerrier coefficients of ``det(x I - M)``, O(n^4)."""
    rows, exact = _normalise(check_square(M))
    n = len(rows)
    ints = _as_integers(rows) if exact else None
    if ints is not None:
        # integer input keeps every M_k integral and the traces divisible by k
        rows = ints
    one = 1 if ints is not None else Fraction(1) if exact else 1.0
    zero = one - one
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    # M_k = M @ M_{k-1} + c_{n-k+1} I, starting from M_0 = 0
    prev = [[zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        cols = list(zip(*prev))
        cur = [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in rows]
        for i in range(n):
            cur[i][i] += coeffs[n - k + 1]
        trace = sum(rows[i][j] * cur[j][i] for i in range(n) for j in range(n))
        coeffs[n - k] = -(trace // k) if ints is not None else -trace / k
        prev = cur
    if ints is not None:
        coeffs = [Fraction(c) for c in coeffs]
    return Polynomial(tuple(coeffs))


def dense_eigenvalues(M, tol: ToleranceConfig = DEFAULT_TOL, max_sweeps: int = 100):
    """Sorted eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Iterates until the off-diagonal Frobenius mass drops below
    ``tol.zero_tol`` times the Frobenius norm of the input. Raises
    :class:`NoConvergence` after ``max_sweeps`` sweeps.
    """
    a = [[float(x) for x in r] for r in check_square(M)]
    n = len(a)
    norm = math.sqrt(sum(x * x for r in a for x in r))
    threshold = tol.zero_tol * max(norm, 1.0)
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))
        if off <= threshold:
            return sorted(a[i][i] for i in range(n))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    rk = a[k]
                    akp, akq = rk[p], rk[q]
                    rk[p] = c * akp - s * akq
                    rk[q] = s * akp + c * akq
                rp, rq = a[p], a[q]
                for k in range(n):
                    apk, aqk = rp[k], rq[k]
                    rp[k] = c * apk - s * aqk
                    rq[k] = s * apk + c * aqk
                a[p][q] = a[q][p] = 0.0
    raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def submatrix_without(M, i: int, j: int):
    """Copy of M with (1-based) row i and column j removed."""
    rows = check_square(M)
    n = len(rows)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"({i}, {j}) outside 1..{n}")
    return [r[: j - 1] + r[j:] for k, r in enumerate(rows) if k != i - 1]


def dense_minor(M, i: int, j: int):
    """Determinant of M with row i and column j removed (1-based)."""
    return dense_determinant(submatrix_without(M, i, j))


def dense_ldl(M):
    """LDL^T by symmetric elimination without pivoting.

    Returns ``(L, d)``. When a pivot is zero and the column below it is also
    zero the multipliers are set to zero; a zero pivot above a nonzero
    column raises :class:`NoLdlDecomposition`.
    """
    rows, exact = _normalise(check_square(M))
    n = len(rows)
    one = Fraction(1) if exact else 1.0
    zero = one - one
    L = [[one if i == j else zero for j in range(n)] for i in range(n)]
    d = [zero] * n
    for k in range(n):
        d[k] = rows[k][k] - sum(L[k][m] ** 2 * d[m] for m in range(k))
        for i in range(k + 1, n):
            r = rows[i][k] - sum(L[i][m] * L[k][m] * d[m] for m in range(k))
            if d[k] == 0:
                if r != 0:
                    raise NoLdlDecomposition(f"zero pivot at {k + 1} with nonzero column")
                L[i][k] = zero
            else:
                L[i][k] = r / d[k]
    return L, d


def dense_cholesky(M):
    """Lower-triangular Cholesky factor (float); raises :class:`NotPositiveDefinite`."""
    a = [[float(x) for x in r] for r in check_square(M)]
    n = len(a)
    L = [[0.0] * n for _ in range(n)]
    for j in range(n):
        s = a[j][j] - sum(L[j][k] ** 2 for k in range(j))
        if s <= 0.0:
            raise NotPositiveDefinite(f"non-positive pivot at {j + 1}")
        L[j][j] = math.sqrt(s)
        for i in range(j + 1, n):
            L[i][j] = (a[i][j] - sum(L[i][k] * L[j][k] for k in range(j))) / L[j][j]
    return L


def dense_quadratic_form(M, x):
    rows = check_square(M)
    return sum(xi * sum(m * xj for m, xj in zip(r, x)) for r, xi in zip(rows, x))


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class OracleReport:
    operation: str
    input_digest: str
    closed_form: object
    oracle: object
    passed: bool
    discrepancy: object

    def to_json(self) -> dict:
        return {
            "operation": self.operation,
            "input": self.input_digest,
            "closed_form": _jsonable(self.closed_form),
            "oracle": _jsonable(self.oracle),
            "passed": self.passed,
            "discrepancy": format_scalar(self.discrepancy),
        }


def _jsonable(value):
    if isinstance(value, Polynomial):
        return [format_scalar(c) for c in value.coeffs]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, str)) or value is None:
        return value
    return format_scalar(value)


def flatten(value):
    if isinstance(value, Polynomial):
        return list(value.coeffs)
    if isinstance(value, (list, tuple)):
        out = []
        for v in value:
            out.extend(flatten(v))
        return out
    return [value]


def digest(*parts) -> str:
    text = "|".join(str(_jsonable(p)) for p in parts)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def discrepancy(closed, oracle):
    """Max-abs difference of two equally shaped values (scalars, nested lists, polynomials)."""
    a, b = flatten(closed), flatten(oracle)
    if len(a) != len(b):
        return math.inf
    return max((abs(x - y) for x, y in zip(a, b)), default=0)


def compare(operation, input_digest, closed, oracle, atol=0) -> OracleReport:
    """Build a report; exact values must match exactly, floats within ``atol``."""
    if isinstance(closed, (bool, str)) or isinstance(oracle, (bool, str)):
        ok = closed == oracle
        return OracleReport(operation, input_digest, closed, oracle, ok, 0 if ok else 1)
    gap = discrepancy(closed, oracle)
    exact = all(is_exact(v) for v in flatten(closed) + flatten(oracle))
    ok = gap == 0 if exact else gap <= atol
    return OracleReport(operation, input_digest, closed, oracle, ok, gap)
