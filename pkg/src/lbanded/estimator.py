"""scikit-learn compatible wrapper around optimal vector damping.

Columns of ``X`` are successive estimates (or their errors) of the same
quantity; rows are samples. ``fit`` estimates their covariance and the
damping weights, ``transform`` returns the damped combination
as a single output column.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .damping import damped_covariance, damping_vector
from .scalars import ToleranceConfig


class VectorDamping(TransformerMixin, BaseEstimator):
    """Combine t successive estimates with covariance-optimal weights.

    Parameters
    ----------
    assume_centered : bool, default=False
        If True, the covariance is the raw second moment ``X.T @ X / n``
        (the usual choice when ``X`` holds estimation errors).
    covariance : array-like of shape (t, t), default=None
        Known covariance of the estimates. When given, ``fit`` ignores the
        sample covariance of ``X`` and only checks the column count.
    eq_tol, zero_tol : float
        Tolerances used for singularity decisions.

    Attributes
    ----------
    covariance_ : ndarray of shape (t, t)
    zeta_ : ndarray of shape (t,)
        Damping weights, summing to one.
    damped_band_ : ndarray of shape (t,) or None
        Band of the covariance of the per-step damped estimates, when it is
        L-banded.
    """

    def __init__(self, assume_centered=False, covariance=None, eq_tol=1e-12, zero_tol=1e-12):
        self.assume_centered = assume_centered
        self.covariance = covariance
        self.eq_tol = eq_tol
        self.zero_tol = zero_tol

    def fit(self, X, y=None):
        X = check_array(X, ensure_min_samples=1, dtype=np.float64)
        t = X.shape[1]
        if self.covariance is not None:
            cov = check_array(self.covariance, dtype=np.float64)
            if cov.shape != (t, t):
                raise ValueError(f"covariance has shape {cov.shape}, expected {(t, t)}")
        elif self.assume_centered:
            cov = X.T @ X / X.shape[0]
        else:
            if X.shape[0] < 2:
                raise ValueError("need at least two samples to estimate a covariance")
            cov = np.atleast_2d(np.cov(X, rowvar=False))
        cov = 0.5 * (cov + cov.T)
        tol = ToleranceConfig(self.eq_tol, self.zero_tol)
        rows = cov.tolist()
        self.covariance_ = cov
        self.zeta_ = np.array(damping_vector(rows, tol).zeta, dtype=np.float64)
        damped = damped_covariance(rows, tol)
        self.damped_covariance_ = np.array(damped.matrix.rows, dtype=np.float64)
        self.damped_band_ = None if damped.band is None else np.array(damped.band, dtype=np.float64)
        self.n_features_in_ = t
        return self

    def transform(self, X):
        check_is_fitted(self, "zeta_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} columns, expected {self.n_features_in_}")
        return (X @ self.zeta_)[:, np.newaxis]

    def damped_variance(self):
        """Variance of the damped estimate, ``1 / (1^T V^{-1} 1)``."""
        check_is_fitted(self, "zeta_")
        return float(self.zeta_ @ self.covariance_ @ self.zeta_)
