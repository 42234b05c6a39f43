"""Covariance-optimal vector damping of iterative estimates.

Given the covariance ``V`` of past estimates ``x_1, ..., x_t``, the damped
estimate ``[x_1, ..., x_t] @ zeta`` with

    zeta = V^{-1} 1 / (1^T V^{-1} 1)

is the affine combination with the smallest variance. Applying it at every
step produces a covariance of damped estimates that is L-banded, which is
checked empirically by :func:`damped_covariance`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DenseSymMatrix, LBandedMatrix, band_deviation, detect_l_banded
from .exceptions import NotLBanded, SingularMatrix, ZeroNormalizer
from .ops import singularity
from .oracle import dense_solve
from .scalars import DEFAULT_TOL, ToleranceConfig, coerce, is_exact, is_zero
from .validation import check_square


@dataclass(frozen=True)
class DampingVector:
    """Weights summing to one; ``normalizer`` is ``1^T V^{-1} 1``."""

    zeta: tuple
    normalizer: object

    def __len__(self):
        return len(self.zeta)

    def apply(self, estimates):
        """Combine ``len(zeta)`` estimates (scalars or equal-length sequences)."""
        estimates = list(estimates)
        if len(estimates) != len(self.zeta):
            raise ValueError(f"expected {len(self.zeta)} estimates, got {len(estimates)}")
        if all(isinstance(e, (list, tuple)) for e in estimates):
            return [sum(z * e[m] for z, e in zip(self.zeta, estimates)) for m in range(len(estimates[0]))]
        return sum(z * e for z, e in zip(self.zeta, estimates))


@dataclass(frozen=True)
class DampedCovariance:
    matrix: DenseSymMatrix
    zetas: tuple
    normalizers: tuple
    band: tuple | None
    deviation: object
    violation: tuple | None = None

    @property
    def is_l_banded(self) -> bool:
        return self.band is not None


def _rows_and_tol(V, tol):
    if tol is None:
        tol = getattr(V, "tol", DEFAULT_TOL)
    return check_square(V), tol


def damping_vector(V, tol: ToleranceConfig | None = None) -> DampingVector:
    """Optimal damping weights from a dense covariance via one linear solve."""
    rows, tol = _rows_and_tol(V, tol)
    exact = all(is_exact(x) for r in rows for x in r)
    one = coerce(1, "rational" if exact else "float")
    y = dense_solve(rows, [one] * len(rows), tol)
    s = sum(y)
    if is_zero(s, tol):
        raise ZeroNormalizer("1^T V^{-1} 1 vanishes")
    return DampingVector(tuple(v / s for v in y), s)


def damping_vector_lbanded(A: LBandedMatrix) -> DampingVector:
    """O(1) shortcut for an invertible L-banded covariance.

    ``A^{-1} 1 = e_n / a_n``, so the weights put everything on the newest
    estimate and the normalizer is ``1 / a_n``.
    """
    err = singularity(A)
    if err is not None:
        raise err
    one = coerce(1, A.mode)
    zeta = (one - one,) * (A.n - 1) + (one,)
    return DampingVector(zeta, one / A.band[-1])


def damped_covariance(V, tol: ToleranceConfig | None = None) -> DampedCovariance:
    """Covariance of the estimates damped with the per-step optimal weights.

    Step k uses ``zeta_k = damping_vector(V[:k, :k])`` padded with zeros to
    length t, and ``W[i, j] = zeta_i^T V zeta_j``. The returned ``band`` is
    the recovered L-band of W, or None when W is not L-banded within ``tol``
    (``violation`` then holds the first offending 1-based position).

    Since ``V zeta_j`` equals ``1 / s_j`` on its first j coordinates
    (``s_j = 1^T V_j^{-1} 1``), W is exactly L-banded with band ``1 / s_k``
    for any symmetric V whose leading blocks pass the checks; in float mode
    only round-off can make the detection fail. Positive definiteness is what
    makes the band non-increasing and nonnegative.
    """
    rows, tol = _rows_and_tol(V, tol)
    t = len(rows)
    zetas, norms = [], []
    for k in range(1, t + 1):
        block = [r[:k] for r in rows[:k]]
        try:
            dv = damping_vector(block, tol)
        except SingularMatrix as exc:
            raise SingularMatrix(f"leading {k}x{k} block is singular", index=k) from exc
        except ZeroNormalizer as exc:
            raise ZeroNormalizer(f"1^T V_k^-1 1 vanishes for k={k}", k=k) from exc
        zero = dv.zeta[0] * 0
        zetas.append(dv.zeta + (zero,) * (t - k))
        norms.append(dv.normalizer)

    # u_j = V zeta_j, then W[i, j] = zeta_i . u_j
    u = [[sum(v * z for v, z in zip(r, zj)) for r in rows] for zj in zetas]
    W = tuple(tuple(sum(a * b for a, b in zip(zi, uj)) for uj in u) for zi in zetas)
    matrix = DenseSymMatrix(W, tol)
    try:
        band = detect_l_banded(matrix, tol).band
        violation = None
    except NotLBanded as exc:
        band, violation = None, exc.position
    return DampedCovariance(matrix, tuple(zetas), tuple(norms), band, band_deviation(W), violation)
