from fractions import Fraction

import pytest

from lbanded import (
    DenseSymMatrix,
    DimensionMismatch,
    EmptyBand,
    IndexOutOfRange,
    NotLBanded,
    ToleranceConfig,
    band_deviation,
    detect_l_banded,
    entry,
    from_band,
    leading_principal_submatrix,
    linear_combination,
    to_dense,
)
from lbanded.scalars import coerce, format_scalar, infer_mode, parse_scalar, scalars_equal, sqrt, to_json_scalar


def test_from_band_examples():
    assert to_dense(from_band([5])).tolist() == [[5]]
    assert to_dense(from_band([3, 2, 1])).tolist() == [[3, 2, 1], [2, 2, 1], [1, 1, 1]]
    assert to_dense(from_band([1, 1])).tolist() == [[1, 1], [1, 1]]


def test_from_band_rejects_empty():
    with pytest.raises(EmptyBand):
        from_band([])


def test_mode_inference():
    assert from_band([3, 2, 1]).mode == "rational"
    assert from_band([3.0, 2, 1]).mode == "float"
    assert isinstance(from_band(["3/2", "1"]).band[0], Fraction)
    assert from_band([1, 2], mode="float").band == (1.0, 2.0)


def test_entry_uses_max_index():
    A = from_band([3, 2, 1])
    assert entry(A, 1, 3) == 1
    assert entry(A, 2, 1) == 2
    assert A.entry(3, 3) == 1
    assert entry(from_band([5]), 1, 1) == 5


@pytest.mark.parametrize("i,j", [(0, 1), (1, 4), (-1, 2)])
def test_entry_out_of_range(i, j):
    with pytest.raises(IndexOutOfRange):
        entry(from_band([3, 2, 1]), i, j)


def test_detect_l_banded():
    assert detect_l_banded([[3, 2], [2, 2]]).band == (3, 2)
    with pytest.raises(NotLBanded) as info:
        detect_l_banded([[3, 0], [0, 2]])
    assert info.value.position == (1, 2)
    assert info.value.deviation == 2


def test_detect_round_trip():
    for band in ([5], [3, 2, 1], [Fraction(1, 3), 7, -2, 0]):
        assert detect_l_banded(to_dense(from_band(band))).band == tuple(band)


def test_detect_float_tolerance():
    rows = [[3.0, 2.0 + 1e-14], [2.0, 2.0]]
    assert detect_l_banded(rows).band == (3.0, 2.0)
    with pytest.raises(NotLBanded):
        detect_l_banded(rows, ToleranceConfig(1e-16, 1e-16))
    assert band_deviation(rows) == pytest.approx(1e-14, rel=0.1)


def test_linear_combination():
    A, B = from_band([3, 2, 1]), from_band([1, 1, 1])
    assert linear_combination([(1, A), (0, B)]).band == (3, 2, 1)
    assert linear_combination([(2, from_band([1, 1])), (3, from_band([2, 0]))]).band == (8, 2)
    assert linear_combination([(1, A), (-1, A)]).band == (0, 0, 0)
    with pytest.raises(DimensionMismatch):
        linear_combination([(1, A), (1, from_band([1, 2]))])


def test_linear_combination_matches_dense_sum():
    A, B = from_band([4, -1, 2]), from_band([Fraction(1, 2), 3, 3])
    C = linear_combination([(Fraction(2, 3), A), (-5, B)])
    dense = [
        [Fraction(2, 3) * x - 5 * y for x, y in zip(ra, rb)]
        for ra, rb in zip(to_dense(A).tolist(), to_dense(B).tolist())
    ]
    assert to_dense(C).tolist() == dense


def test_leading_principal_submatrix():
    A = from_band([3, 2, 1])
    assert leading_principal_submatrix(A, 2).band == (3, 2)
    assert leading_principal_submatrix(A, 3).band == (3, 2, 1)
    assert leading_principal_submatrix(from_band([5]), 1).band == (5,)
    with pytest.raises(IndexOutOfRange):
        leading_principal_submatrix(A, 4)


def test_dense_sym_matrix_checks_symmetry():
    M = DenseSymMatrix.from_rows([[1, "1/2"], ["1/2", 3]])
    assert M[0, 1] == Fraction(1, 2) and M.n == 2
    with pytest.raises(ValueError):
        DenseSymMatrix.from_rows([[1, 2], [3, 4]])


def test_tolerance_config_validation():
    with pytest.raises(ValueError):
        ToleranceConfig(0, 1e-12)
    with pytest.raises(ValueError):
        ToleranceConfig(1e-12, -1)


def test_scalar_helpers():
    assert parse_scalar("3/2") == Fraction(3, 2)
    assert parse_scalar("1.5", "float") == 1.5
    assert parse_scalar("0.1") == Fraction(1, 10)
    assert coerce(Fraction(1, 4), "float") == 0.25
    assert infer_mode([1, Fraction(1, 2)]) == "rational"
    assert infer_mode([1, 0.5]) == "float"
    assert format_scalar(Fraction(-3, 4)) == "-3/4"
    assert format_scalar(Fraction(2)) == "2"
    assert to_json_scalar(Fraction(1, 3)) == "1/3"
    assert to_json_scalar(0.1) == 0.1
    assert sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt(Fraction(2)) == pytest.approx(2**0.5)


def test_scalars_equal_is_relative_in_float_mode():
    tol = ToleranceConfig(1e-12, 1e-12)
    assert scalars_equal(1e6, 1e6 * (1 + 1e-13), tol)
    assert not scalars_equal(1e6, 1e6 * (1 + 1e-10), tol)
    assert scalars_equal(0.0, 1e-13, tol)
    assert not scalars_equal(Fraction(1, 10**20), 0, tol)
