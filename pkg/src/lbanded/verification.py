"""Seeded closed-form vs dense-oracle checks, and the random inputs they use."""

from __future__ import annotations

import random

from . import ops
from .core import DefinitenessClass, LBandedMatrix, from_band, matmul, to_dense
from .damping import damping_vector, damping_vector_lbanded
from .oracle import (
    compare,
    dense_charpoly,
    dense_determinant,
    dense_eigenvalues,
    dense_inverse,
    dense_minor,
    dense_quadratic_form,
    digest,
    flatten,
)
from .scalars import DEFAULT_TOL, RATIONAL, ToleranceConfig, coerce


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent generator per trial, so results do not depend on scheduling."""
    return random.Random(seed * 1_000_003 + trial)


def random_invertible_band(rng: random.Random, n: int, low: int = -9, high: int = 9):
    """Integer band with a_k != a_{k+1} and a_n != 0."""
    band = []
    for k in range(n):
        while True:
            v = rng.randint(low, high)
            if band and v == band[-1]:
                continue
            if k == n - 1 and v == 0:
                continue
            break
        band.append(v)
    return band


def random_band(rng: random.Random, n: int, low: int = -5, high: int = 5):
    return [rng.randint(low, high) for _ in range(n)]


def random_band_any_class(rng: random.Random, n: int):
    """Integer band drawn so the five definiteness classes all occur often."""
    kind = rng.randrange(5)
    if kind == 0:  # strictly decreasing positive
        band = sorted(rng.sample(range(1, 3 * n + 4), n), reverse=True)
    elif kind == 1:  # non-increasing non-negative, usually with a tie or a zero
        band = sorted((rng.randint(0, 4) for _ in range(n)), reverse=True)
    elif kind == 2:
        band = sorted(rng.sample(range(-3 * n - 3, 0), n))
    elif kind == 3:
        band = sorted(rng.randint(-4, 0) for _ in range(n))
    else:
        band = random_band(rng, n)
    return band


def classify_by_eigenvalues(eigs, zero_tol: float) -> DefinitenessClass:
    """Definiteness label from eigenvalue signs, strict classes first."""
    if all(e > zero_tol for e in eigs):
        return DefinitenessClass.POSITIVE_DEFINITE
    if all(e >= -zero_tol for e in eigs):
        return DefinitenessClass.POSITIVE_SEMIDEFINITE
    if all(e < -zero_tol for e in eigs):
        return DefinitenessClass.NEGATIVE_DEFINITE
    if all(e <= zero_tol for e in eigs):
        return DefinitenessClass.NEGATIVE_SEMIDEFINITE
    return DefinitenessClass.INDEFINITE


def _atol(value, rel=1e-8):
    scale = max((abs(float(v)) for v in flatten(value)), default=0.0)
    return rel * (1.0 + scale)


def check_band(A: LBandedMatrix, rng: random.Random):
    """All closed-form vs oracle reports for one invertible band."""
    mode = A.mode
    n = A.n
    tag = digest(A.band)
    dense = to_dense(A).tolist()
    reports = []

    def add(name, closed, oracle):
        reports.append(compare(name, tag, closed, oracle, _atol(oracle)))

    add("determinant", ops.determinant(A), dense_determinant(dense))
    add("inverse", ops.inverse(A).to_dense().tolist(), dense_inverse(dense, A.tol))

    cof_oracle = [
        [(1 if (i + j) % 2 == 0 else -1) * dense_minor(dense, i, j) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    add("cofactor", [[ops.cofactor(A, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)], cof_oracle)
    add(
        "minor",
        [[ops.minor(A, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)],
        [[dense_minor(dense, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)],
    )

    b = [coerce(rng.randint(-9, 9), mode) for _ in range(n)]
    closed_sub, oracle_sub = [], []
    for k in range(1, n + 1):
        closed_sub.append(ops.det_column_substituted(A, k, b))
        oracle_sub.append(dense_determinant([r[: k - 1] + [b[i]] + r[k:] for i, r in enumerate(dense)]))
    add("det_column_substituted", closed_sub, oracle_sub)

    add("characteristic_polynomial", ops.characteristic_polynomial(A), dense_charpoly(dense))

    if ops.ldl_exists(A):
        add("ldl_reconstruct", ops.ldl_decompose(A).reconstruct(), dense)
    if ops.is_positive_definite(A):
        add("cholesky_reconstruct", ops.cholesky_decompose(A).reconstruct(), dense)

    x = [coerce(rng.randint(-9, 9), mode) for _ in range(n)]
    add("quadratic_form", ops.quadratic_form(A, x), dense_quadratic_form(dense, x))

    h = [coerce(rng.randint(-5, 5), mode) for _ in range(n)]
    add(
        "left_multiply_structured_upper",
        list(to_dense(ops.left_multiply_structured_upper(h, A)).tolist()),
        matmul(ops.structured_upper_matrix(h), dense),
    )
    add("square", ops.square(A).tolist(), matmul(dense, dense))

    add("damping_vector_lbanded", list(damping_vector_lbanded(A).zeta), list(damping_vector(dense, A.tol).zeta))

    if n >= 2:
        m11 = dense_minor(dense, 1, 1)
        predicted = [m11, m11] + [m11 * 0] * (n - 2)
        add("first_row_minors", predicted, [dense_minor(dense, 1, k) for k in range(1, n + 1)])
    return reports


def check_definiteness(A: LBandedMatrix):
    eigs = dense_eigenvalues(to_dense(A).tolist(), A.tol)
    oracle = classify_by_eigenvalues(eigs, A.tol.zero_tol)
    return compare("classify_definiteness", digest(A.band), ops.classify_definiteness(A).value, oracle.value)


def run_verification(
    n_max: int = 6,
    trials: int = 100,
    seed: int = 0,
    mode: str = RATIONAL,
    tol: ToleranceConfig = DEFAULT_TOL,
):
    """Run every check on ``trials`` seeded random inputs of size 1..n_max."""
    if n_max < 1 or trials < 1:
        raise ValueError("n_max and trials must be positive")
    reports = []
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        n = rng.randint(1, n_max)
        A = from_band(random_invertible_band(rng, n), mode=mode, tol=tol)
        reports.extend(check_band(A, rng))
        B = from_band(random_band_any_class(rng, n), mode=mode, tol=tol)
        reports.append(check_definiteness(B))
    return reports


__all__ = [
    "classify_by_eigenvalues",
    "check_band",
    "check_definiteness",
    "random_band",
    "random_band_any_class",
    "random_invertible_band",
    "run_verification",
    "trial_rng",
]
