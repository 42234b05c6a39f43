"""Closed-form algebra of L-banded matrices.

An L-banded matrix has entry (i, j) equal to ``a[max(i, j)]``. This package
provides O(n) determinants, tridiagonal inverses, LDL/Cholesky factors,
cofactors, characteristic polynomials and structured products computed from
the band vector, dense brute-force oracles to check them, and the optimal
vector damping that produces such matrices.

The scikit-learn wrapper lives in :mod:`lbanded.estimator` and is not
imported here.
"""

from .core import (
    DefinitenessClass,
    DenseSymMatrix,
    LBandedMatrix,
    band_deviation,
    detect_l_banded,
    entry,
    from_band,
    leading_principal_submatrix,
    linear_combination,
    to_dense,
)
from .damping import (
    DampedCovariance,
    DampingVector,
    damped_covariance,
    damping_vector,
    damping_vector_lbanded,
)
from .exceptions import (
    DimensionMismatch,
    EmptyBand,
    IndexOutOfRange,
    LBandError,
    NoConvergence,
    NoLdlDecomposition,
    NotLBanded,
    NotPositiveDefinite,
    ParseError,
    SingularMatrix,
    UnsupportedOp,
    ZeroNormalizer,
)
from .ops import *  # noqa: F401,F403
from .ops import __all__ as _ops_all
from .polynomial import Polynomial
from .scalars import ToleranceConfig

__version__ = "0.1.0"

__all__ = [
    "DefinitenessClass",
    "DenseSymMatrix",
    "LBandedMatrix",
    "Polynomial",
    "ToleranceConfig",
    "band_deviation",
    "detect_l_banded",
    "entry",
    "from_band",
    "leading_principal_submatrix",
    "linear_combination",
    "to_dense",
    "DampedCovariance",
    "DampingVector",
    "damped_covariance",
    "damping_vector",
    "damping_vector_lbanded",
    "DimensionMismatch",
    "EmptyBand",
    "IndexOutOfRange",
    "LBandError",
    "NoConvergence",
    "NoLdlDecomposition",
    "NotLBanded",
    "NotPositiveDefinite",
    "ParseError",
    "SingularMatrix",
    "UnsupportedOp",
    "ZeroNormalizer",
    *_ops_all,
]
