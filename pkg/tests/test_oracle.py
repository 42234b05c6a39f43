import json
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lbanded import NoLdlDecomposition, NotPositiveDefinite, SingularMatrix, from_band, ops, to_dense
from lbanded.core import identity, matmul, max_abs_diff
from lbanded.oracle import (
    OracleReport,
    compare,
    dense_charpoly,
    dense_cholesky,
    dense_determinant,
    dense_eigenvalues,
    dense_inverse,
    dense_ldl,
    dense_minor,
    dense_solve,
    digest,
)

small_int_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
)


def _sym(rows):
    n = len(rows)
    return [[rows[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]


def test_determinant_examples():
    assert dense_determinant([[5]]) == 5
    assert dense_determinant(to_dense(from_band([3, 2, 1])).tolist()) == 1
    assert dense_determinant(identity(4)) == 1
    assert dense_determinant([[0, 1], [1, 0]]) == -1
    assert dense_determinant([[1.0, 2.0], [2.0, 4.0]]) == 0.0


def _cofactor_expansion(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _cofactor_expansion([r[:j] + r[j + 1:] for r in M[1:]]) for j in range(len(M)))


@given(small_int_matrices)
def test_bareiss_matches_cofactor_expansion(M):
    assert dense_determinant(M) == _cofactor_expansion(M)


@given(small_int_matrices)
def test_float_determinant_close_to_exact(M):
    exact = dense_determinant(M)
    approx = dense_determinant([[float(x) for x in r] for r in M])
    assert approx == pytest.approx(float(exact), rel=1e-9, abs=1e-7)


def test_inverse_examples():
    assert dense_inverse([[2]]) == [[Fraction(1, 2)]]
    assert dense_inverse(to_dense(from_band([2, 1])).tolist()) == [[1, -1], [-1, 2]]
    assert dense_inverse(identity(3)) == identity(3)
    with pytest.raises(SingularMatrix):
        dense_inverse([[1, 1], [1, 1]])
    with pytest.raises(SingularMatrix):
        dense_inverse([[1.0, 1.0], [1.0, 1.0]])


@given(small_int_matrices)
def test_inverse_times_matrix(M):
    if dense_determinant(M) == 0:
        return
    assert matmul(dense_inverse(M), M) == identity(len(M), Fraction(1))


def test_solve():
    assert dense_solve([[2, 1], [1, 1]], [3, 2]) == [1, 1]
    x = dense_solve([[4.0, 1.0], [1.0, 3.0]], [1.0, 2.0])
    assert x == pytest.approx(np.linalg.solve([[4, 1], [1, 3]], [1, 2]).tolist())
    with pytest.raises(SingularMatrix):
        dense_solve([[1, 2], [2, 4]], [1, 1])


def test_charpoly_examples():
    assert dense_charpoly([[5]]).coeffs == (-5, 1)
    assert dense_charpoly(identity(2)).coeffs == (1, -2, 1)
    p = dense_charpoly(to_dense(from_band([3, 2, 1])).tolist())
    assert p.coeffs == (-1, 5, -6, 1)
    D = to_dense(from_band([3, 2, 1])).tolist()
    for lam in range(4):
        shifted = [[(lam if i == j else 0) - D[i][j] for j in range(3)] for i in range(3)]
        assert p(lam) == dense_determinant(shifted)


@given(small_int_matrices)
def test_charpoly_constant_term(M):
    n = len(M)
    assert dense_charpoly(M)(0) == (-1) ** n * dense_determinant(M)
    rational = [[Fraction(x, 3) for x in r] for r in M]
    assert dense_charpoly(rational)(0) == (-1) ** n * dense_determinant(rational)


def test_eigenvalue_examples():
    assert dense_eigenvalues([[5]]) == [5]
    assert dense_eigenvalues(identity(3)) == [1, 1, 1]
    r = math.sqrt(5)
    assert dense_eigenvalues(to_dense(from_band([2, 1])).tolist()) == pytest.approx([(3 - r) / 2, (3 + r) / 2])


@given(small_int_matrices)
def test_eigenvalues_trace_and_product(M):
    S = _sym(M)
    eigs = dense_eigenvalues(S)
    n = len(S)
    scale = 1 + max(abs(x) for r in S for x in r) ** n
    assert sum(eigs) == pytest.approx(sum(S[i][i] for i in range(n)), rel=1e-8, abs=1e-8)
    assert math.prod(eigs) == pytest.approx(float(dense_determinant(S)), rel=1e-8, abs=1e-8 * scale)
    assert eigs == pytest.approx(sorted(np.linalg.eigvalsh(np.array(S, dtype=float))), abs=1e-8 * scale)


def test_eigenvalues_satisfy_characteristic_polynomial():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 12)
        a = [0.0] * n
        a[-1] = rng.uniform(-2, 2)
        for k in range(n - 2, -1, -1):
            a[k] = a[k + 1] + rng.choice((-1, 1)) * rng.uniform(1e-3, 1)
        A = from_band(a, mode="float")
        for lam in dense_eigenvalues(to_dense(A).tolist()):
            assert abs(ops.characteristic_polynomial_at(A, lam)) / (1 + abs(lam) ** n) < 1e-6


def test_float_charpoly_coefficients_close_to_exact():
    rng = random.Random(6)
    for n in (4, 8, 16, 24):
        exact = [Fraction(rng.randint(1, 1000), 1000) for _ in range(n)]
        exact = [sum(exact[k:]) for k in range(n)]
        p_exact = ops.characteristic_polynomial(from_band(exact))
        p_float = ops.characteristic_polynomial(from_band([float(x) for x in exact]))
        for c, e in zip(p_float.coeffs, p_exact.coeffs):
            assert abs(c - float(e)) <= 1e-10 * max(1.0, abs(float(e)))


def test_minor_examples():
    D = to_dense(from_band([3, 2, 1])).tolist()
    assert dense_minor(D, 1, 3) == 0
    assert dense_minor(D, 1, 1) == 1
    assert dense_minor([[7, 2], [2, 9]], 1, 1) == 9
    assert dense_minor([[4]], 1, 1) == 1


def test_ldl_and_cholesky_oracles():
    L, d = dense_ldl([[4, 2], [2, 3]])
    assert L == [[1, 0], [Fraction(1, 2), 1]] and d == [4, 2]
    with pytest.raises(NoLdlDecomposition):
        dense_ldl([[0, 1], [1, 0]])
    C = dense_cholesky([[4, 2], [2, 3]])
    assert max_abs_diff(C, [[2, 0], [1, math.sqrt(2)]]) < 1e-15
    with pytest.raises(NotPositiveDefinite):
        dense_cholesky([[1, 2], [2, 1]])


def test_report_json():
    r = compare("determinant", digest([3, 2, 1]), Fraction(1), Fraction(1))
    assert r.passed and r.discrepancy == 0
    data = r.to_json()
    assert data["closed_form"] == "1" and data["passed"] is True
    json.dumps(data)
    bad = compare("determinant", "x", Fraction(1), Fraction(2))
    assert not bad.passed and bad.discrepancy == 1
    close = compare("determinant", "x", 1.0, 1.0 + 1e-12, atol=1e-9)
    assert close.passed
    assert isinstance(r, OracleReport)


def test_digest_is_stable():
    assert digest([3, 2, 1]) == digest([3, 2, 1])
    assert digest([3, 2, 1]) != digest([3, 2, 2])
    assert len(digest([1])) == 16
