"""Exact polynomial / truncated series arithmetic."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zassenhaus.series import (
    ConstantTermNotOne,
    NegativeExponent,
    NotInvertible,
    OrderExceeded,
    RationalFunction,
    TruncPoly,
    TruncSeries,
    ZeroConstantDenominator,
    expand_rational,
    format_poly,
    poly_gcd,
    product_identity_rhs,
    series_inv,
    series_log,
    series_mul,
)


class TestTruncPoly:
    def test_trailing_zeros_stripped(self):
        assert TruncPoly([1, 2, 0, 0]) == TruncPoly([1, 2])
        assert TruncPoly([0, 0]).degree == -1

    def test_indexing_beyond_degree(self):
        p = TruncPoly([1, 2])
        assert p[0] == 1 and p[1] == 2 and p[5] == 0

    def test_arithmetic(self):
        a = TruncPoly([1, 1])
        assert a * a == TruncPoly([1, 2, 1])
        assert a + TruncPoly([0, -1]) == TruncPoly([1])
        assert a - a == TruncPoly([])
        assert a ** 3 == TruncPoly([1, 3, 3, 1])

    def test_negative_power_rejected(self):
        with pytest.raises(NegativeExponent):
            TruncPoly([1, 1]) ** -1

    def test_evaluation(self):
        assert TruncPoly([1, -3, 1])(2) == 1 - 6 + 4

    def test_bool_coefficient_rejected(self):
        with pytest.raises(TypeError):
            TruncPoly([True, 1])

    def test_gcd_primitive(self):
        a = TruncPoly([2, 2])        # 2(1+t)
        b = TruncPoly([4, 0, -4])    # 4(1+t)(1-t)
        assert poly_gcd(a, b) == TruncPoly([1, 1])


class TestRationalFunction:
    def test_common_factor_cancelled(self):
        # (2 - 2t^2) / (2 - 2t) == (1 + t) / 1
        rf = RationalFunction([2, 0, -2], [2, -2])
        assert rf.num == TruncPoly([1, 1])
        assert rf.den == TruncPoly([1])

    def test_zero_numerator_canonical(self):
        assert RationalFunction([0], [1, -1]) == RationalFunction([0], [5])

    def test_denominator_unit_required(self):
        with pytest.raises(ZeroConstantDenominator):
            RationalFunction([1], [0, 1])

    def test_multiplication(self):
        half = RationalFunction([1], [1, -1])
        sq = half * half
        assert sq == RationalFunction([1], [1, -2, 0, 0]) or sq == RationalFunction(
            [1], [1, -2, 1]
        )
        assert expand_rational(sq, 4).int_coeffs() == [1, 2, 3, 4, 5]

    def test_fibonacci_expansion(self):
        # 1/(1 - 3t + t^2) generates odd-indexed Fibonacci numbers
        rf = RationalFunction([1], [1, -3, 1])
        assert expand_rational(rf, 4).int_coeffs() == [1, 3, 8, 21, 55]


class TestTruncSeries:
    def test_order_respected(self):
        s = TruncSeries(3, [1, 1])
        assert s[3] == 0
        with pytest.raises(OrderExceeded):
            s[4]
        with pytest.raises(OrderExceeded):
            s[-1]

    def test_too_many_coefficients_rejected(self):
        with pytest.raises(ValueError):
            TruncSeries(1, [1, 2, 3])

    def test_inverse_of_ones(self):
        s = TruncSeries(3, [1, 1, 1, 1])
        assert s.inverse().int_coeffs() == [1, -1, 0, 0]

    def test_inverse_requires_unit(self):
        with pytest.raises(NotInvertible):
            TruncSeries(3, [0, 1]).inverse()

    def test_log_one_plus_t(self):
        s = TruncSeries(4, [1, 1]).log()
        assert [s[k] for k in range(5)] == [
            0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4),
        ]

    def test_log_geometric(self):
        # log 1/(1-2t): b_n = 2^n / n
        s = expand_rational(RationalFunction([1], [1, -2]), 3).log()
        assert [s[k] for k in range(4)] == [0, 2, 2, Fraction(8, 3)]

    def test_log_requires_unit_one(self):
        with pytest.raises(ConstantTermNotOne):
            TruncSeries(3, [2, 1]).log()

    def test_pow_zero_and_huge(self):
        s = TruncSeries(3, [1, 1])
        assert (s ** 0).int_coeffs() == [1, 0, 0, 0]
        big = s ** (10 ** 6)
        # binomial coefficients of a genuinely astronomical power
        assert big[2] == (10 ** 6) * (10 ** 6 - 1) // 2

    def test_pow_negative_rejected(self):
        with pytest.raises(NegativeExponent):
            TruncSeries(2, [1, 1]) ** -2

    def test_scalar_mixing(self):
        s = TruncSeries(2, [1, 2, 4])
        assert (s - 1).valuation() == 1
        assert ((s * 2) / 2) == s


def test_product_identity_rhs_single_layer():
    # one generator in degree 1, p=2: (1-t^2)/(1-t) = 1+t
    s = product_identity_rhs([1, 0, 0, 0], 2, 3)
    assert s.int_coeffs() == [1, 1, 0, 0]


def test_product_identity_rhs_telescoping():
    # layers at n = 1, 2, 4 telescope to (1-t^8)/(1-t)
    s = product_identity_rhs([1, 1, 0, 1, 0, 0, 0], 2, 7)
    assert s.int_coeffs() == [1] * 8


def test_product_identity_rhs_rejects_negative():
    with pytest.raises(NegativeExponent):
        product_identity_rhs([1, -1], 2, 4)


def test_product_identity_rhs_rejects_composite_p():
    with pytest.raises(ValueError):
        product_identity_rhs([1], 6, 4)


def test_format_poly():
    assert format_poly(TruncPoly([1, -2, 0, 3])) == "1 - 2t + 3t^3"
    assert format_poly(TruncPoly([0, 1])) == "t"
    assert format_poly(TruncPoly([])) == "0"


# property checks on small random series


def _series(order, lo=-4, hi=4, unit=False):
    head = st.just(1) if unit else st.integers(lo, hi)
    return st.lists(st.integers(lo, hi), min_size=order, max_size=order).flatmap(
        lambda tail: head.map(lambda h: TruncSeries(order, [h] + tail))
    )


@settings(max_examples=60, deadline=None)
@given(_series(6, unit=True), _series(6, unit=True))
def test_log_turns_products_into_sums(a, b):
    lhs = series_log(series_mul(a, b))
    rhs = series_log(a) + series_log(b)
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(_series(6, lo=1, hi=5))
def test_double_inverse_is_identity(s):
    assert series_inv(series_inv(s)) == s


@settings(max_examples=60, deadline=None)
@given(_series(5), _series(5), _series(5))
def test_multiplication_laws(a, b, c):
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
