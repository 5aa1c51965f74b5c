import json

import pytest

from parteq.classes import ClassParams, count_A, count_B
from parteq.errors import DegreeMismatch, NotInvertible, OutOfRange
from parteq.qseries import (
    PochhammerSpec,
    TruncatedSeries,
    first_difference,
    lhs_series,
    pochhammer,
    rhs_series,
    solutionI_check,
)


def brute_force_odd_partitions(n: int) -> int:
    """Oracle: partitions of n into odd parts, by direct recursion."""

    def count(total, max_part):
        if total == 0:
            return 1
        return sum(
            count(total - p, p)
            for p in range(1, min(total, max_part) + 1)
            if p % 2 == 1
        )

    return count(n, n)


def test_one_and_monomial():
    s = TruncatedSeries.one(4)
    assert s.coefficients == (1, 0, 0, 0, 0)
    assert TruncatedSeries.monomial(2, 4).coefficients == (0, 0, 1, 0, 0)
    assert TruncatedSeries.monomial(9, 4).coefficients == (0, 0, 0, 0, 0)


def test_mul_identity():
    s = TruncatedSeries.from_coefficients([3, -1, 2, 0, 5])
    assert s * TruncatedSeries.one(4) == s


def test_mul_geometric_telescopes():
    N = 12
    one_minus_q = TruncatedSeries.from_coefficients([1, -1], N)
    geometric = TruncatedSeries.from_coefficients([1] * (N + 1), N)
    assert one_minus_q * geometric == TruncatedSeries.one(N)


def test_mul_square():
    s = TruncatedSeries.from_coefficients([1, 1], 3)
    assert (s * s).coefficients == (1, 2, 1, 0)


def test_mul_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        TruncatedSeries.one(3) * TruncatedSeries.one(4)


def test_inverse_geometric():
    s = TruncatedSeries.from_coefficients([1, -1], 8)
    assert s.inverse().coefficients == (1,) * 9


def test_inverse_involution():
    s = TruncatedSeries.from_coefficients([1, 3, -2, 7, 0, 1], 5)
    assert s.inverse().inverse() == s


def test_inverse_of_single_factor_coefficient():
    # 1 / (1 - q): every coefficient is 1
    s = pochhammer(PochhammerSpec(1, 1, 1), 10).inverse()
    assert s.coefficient(7) == 1


def test_inverse_requires_unit_constant():
    with pytest.raises(NotInvertible):
        TruncatedSeries.from_coefficients([2, 1], 3).inverse()


def test_times_inverse_factor_matches_inverse():
    N = 20
    s = TruncatedSeries.one(N).times_inverse_factor(3)
    assert s == pochhammer(PochhammerSpec(3, 1, 1), N).inverse()


def test_coefficient_out_of_range():
    with pytest.raises(OutOfRange):
        TruncatedSeries.one(3).coefficient(4)
    with pytest.raises(OutOfRange):
        TruncatedSeries.one(3).coefficient(-1)


def test_pochhammer_empty_product():
    assert pochhammer(PochhammerSpec(1, 1, 0), 5) == TruncatedSeries.one(5)


def test_pochhammer_two_factors():
    s = pochhammer(PochhammerSpec(1, 1, 2), 3)
    assert s.coefficients == (1, -1, -1, 1)


def test_pochhammer_odd_parts_quotient():
    # (q^2;q^2)_inf / (q;q)_inf counts partitions into odd parts
    N = 12
    s = pochhammer(PochhammerSpec(2, 2, None), N)
    for e in range(1, N + 1):
        s = s.times_inverse_factor(e)
    for n in range(N + 1):
        assert s.coefficient(n) == brute_force_odd_partitions(n)


def test_lhs_series_monthly_count():
    assert lhs_series(2, 2, 4, 10).coefficient(7) == 3


def test_lhs_series_degenerate_point():
    assert lhs_series(1, 1, 1, 3).coefficient(1) == 1


def test_lhs_series_vanishes_below_dk():
    s = lhs_series(3, 3, 2, 30)
    for e in range(9):
        assert s.coefficient(e) == 0


def test_rhs_series_worked_example_parameters():
    for (k, d, m) in [(7, 3, 4), (4, 3, 7)]:
        assert lhs_series(k, d, m, 30) == rhs_series(k, d, m, 30)


def test_rhs_minimal_coefficient():
    for (k, d, m) in [(3, 2, 2), (2, 3, 5), (4, 2, 1)]:
        assert rhs_series(k, d, m, 30).coefficient(d * k) == 1


def test_solutionI_small_cases():
    assert solutionI_check(0, 50)
    assert solutionI_check(2, 50)
    assert solutionI_check(5, 80)


def test_first_difference_reports_position():
    s = TruncatedSeries.from_coefficients([1, 2, 3], 2)
    t = TruncatedSeries.from_coefficients([1, 2, 4], 2)
    assert first_difference(s, t) == (2, 3, 4)
    assert first_difference(s, s) is None


def test_series_coefficients_match_enumeration():
    N = 16
    for (k, d, m) in [(1, 2, 2), (2, 3, 1), (2, 2, 4), (3, 4, 2)]:
        lhs = lhs_series(k, d, m, N)
        rhs = rhs_series(k, d, m, N)
        for n in range(1, N + 1):
            params = ClassParams(n, k, d, m)
            assert lhs.coefficient(n) == count_A(params)
            assert rhs.coefficient(n) == count_B(params)


def test_m_stability_beyond_truncation():
    # once m*d exceeds the truncation window the bound is invisible
    N, k, d = 24, 2, 3
    m = N // d + 1
    assert lhs_series(k, d, m, N) == lhs_series(k, d, m + 1, N)


def test_json_serialization_uses_decimal_strings():
    s = TruncatedSeries.from_coefficients([1, -2, 10**30], 2)
    doc = json.loads(s.to_json())
    assert doc["truncation_degree"] == 2
    assert doc["coefficients"] == ["1", "-2", str(10**30)]
