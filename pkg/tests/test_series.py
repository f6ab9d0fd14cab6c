"""Tests for the exact truncated-series engine."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmex.series import (
    INFINITE,
    IntSeries,
    add,
    coefficient,
    eval_at,
    invert,
    make_series,
    mul,
    one,
    poch,
    scale_shift,
    zero,
)


def brute_mul(a, b):
    # reference convolution, written independently of the sparse-aware path
    n = min(len(a), len(b)) - 1
    out = [0] * (n + 1)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            out[i + j] += a[i] * b[j]
    return out


class TestConstruction:
    def test_make_series_basic(self):
        s = make_series([1, 2, 3], 2)
        assert s.order == 2
        assert s.coefficients() == (1, 2, 3)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            make_series([1, 2], 2)
        with pytest.raises(ValueError):
            make_series([1, 2, 3, 4], 2)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            make_series([], -1)

    def test_empty_coefficients_rejected(self):
        with pytest.raises(ValueError):
            IntSeries([])

    def test_non_integer_rejected(self):
        with pytest.raises(TypeError):
            IntSeries([1, 2.5])

    def test_equality_and_hash(self):
        assert make_series([1, 2], 1) == make_series([1, 2], 1)
        assert make_series([1, 2], 1) != make_series([1, 2, 0], 2)
        assert hash(make_series([1, 2], 1)) == hash(make_series([1, 2], 1))


class TestCoefficientAccess:
    def test_in_range(self):
        s = make_series([5, 6, 7], 2)
        assert coefficient(s, 0) == 5
        assert coefficient(s, 2) == 7

    def test_past_truncation_raises(self):
        # never silently 0 beyond the retained range
        s = make_series([5, 6, 7], 2)
        with pytest.raises(IndexError):
            s.coefficient(3)
        with pytest.raises(IndexError):
            s.coefficient(-1)


class TestArithmetic:
    def test_add_truncates_to_smaller_order(self):
        f = make_series([1, 1, 1, 1, 1, 1], 5)
        g = make_series([1, 2, 3, 4], 3)
        assert add(f, g).coefficients() == (2, 3, 4, 5)

    def test_mul_example(self):
        f = make_series([1, 1, 1, 2], 3)
        g = make_series([1, 1, -1, 2], 3)
        assert mul(f, g).coefficients() == (1, 2, 1, 4)

    def test_mul_sparse_operand(self):
        f = make_series([1] * 9, 8)
        theta = make_series([1, 0, 0, -1, 0, 0, 0, 0, 1], 8)
        assert mul(f, theta).coefficients() == tuple(brute_mul([1] * 9, [1, 0, 0, -1, 0, 0, 0, 0, 1]))

    def test_invert_geometric(self):
        assert invert(make_series([1, -1, 0, 0, 0], 4)).coefficients() == (1, 1, 1, 1, 1)
        assert invert(make_series([1, 1, 0, 0], 3)).coefficients() == (1, -1, 1, -1)

    def test_invert_requires_unit_constant(self):
        with pytest.raises(ValueError):
            invert(make_series([2, 1], 1))
        with pytest.raises(ValueError):
            invert(make_series([0, 1], 1))

    def test_invert_negative_unit(self):
        f = make_series([-1, 1, 2], 2)
        assert mul(f, invert(f)) == one(2)

    def test_scale_shift(self):
        f = make_series([1, 1, 0], 2)
        assert scale_shift(f, 2, 1).coefficients() == (0, 2, 2)
        assert scale_shift(f, 3).coefficients() == (3, 3, 0)

    def test_scale_shift_drops_top(self):
        f = make_series([1, 2, 3], 2)
        assert scale_shift(f, 1, 2).coefficients() == (0, 0, 1)
        assert scale_shift(f, 1, 5).coefficients() == (0, 0, 0)

    def test_scale_shift_negative_shift_rejected(self):
        with pytest.raises(ValueError):
            scale_shift(make_series([1], 0), 1, -1)


class TestEval:
    def test_polynomial_value(self):
        s = make_series([1, 1, 1], 2)
        assert eval_at(s, 0.5) == pytest.approx(1.75, abs=1e-15)

    def test_domain_enforced(self):
        s = one(3)
        for x in (0.0, 1.0, -0.5, 2.0):
            with pytest.raises(ValueError):
                eval_at(s, x)

    def test_geometric_tail(self):
        # prefix of 1/(1-q) at x=1/2 approaches 2 with error 2^-order
        s = invert(make_series([1, -1] + [0] * 48, 49))
        assert abs(eval_at(s, 0.5) - 2.0) < 2.0 ** -48


class TestPoch:
    def test_infinite_product_distinct_counts(self):
        got = poch(1, 1, 1, INFINITE, 9)
        assert got.coefficients() == (1, 1, 1, 2, 2, 3, 4, 5, 6, 8)

    def test_high_base_truncates_to_single_factor(self):
        assert poch(1, 2, 1, INFINITE, 2).coefficients() == (1, 0, 1)

    def test_zero_count_is_one(self):
        assert poch(1, 1, 1, 0, 6) == one(6)

    def test_finite_count(self):
        # (1+q)(1+q^2) = 1 + q + q^2 + q^3
        assert poch(1, 1, 1, 2, 4).coefficients() == (1, 1, 1, 1, 0)

    def test_euler_product_pentagonal(self):
        # signs follow (-1)^j at generalized pentagonal exponents j(3j+-1)/2
        got = poch(-1, 1, 1, INFINITE, 12).coefficients()
        assert got == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            poch(2, 1, 1, INFINITE, 5)
        with pytest.raises(ValueError):
            poch(1, 0, 1, INFINITE, 5)
        with pytest.raises(ValueError):
            poch(1, 1, 0, INFINITE, 5)
        with pytest.raises(ValueError):
            poch(1, 1, 1, -2, 5)
        with pytest.raises(ValueError):
            poch(1, 1, 1, INFINITE, -1)

    def test_euler_identity_small(self):
        n = 300
        lhs = mul(poch(1, 1, 1, INFINITE, n), poch(-1, 1, 2, INFINITE, n))
        assert lhs == one(n)


coeff_lists = st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=65)


class TestRingLaws:
    @settings(max_examples=100)
    @given(coeff_lists, coeff_lists)
    def test_add_commutes(self, a, b):
        f, g = IntSeries(a), IntSeries(b)
        assert add(f, g) == add(g, f)

    @settings(max_examples=100)
    @given(coeff_lists, coeff_lists)
    def test_mul_commutes(self, a, b):
        f, g = IntSeries(a), IntSeries(b)
        assert mul(f, g) == mul(g, f)

    @settings(max_examples=60)
    @given(coeff_lists, coeff_lists, coeff_lists)
    def test_mul_associates(self, a, b, c):
        f, g, h = IntSeries(a), IntSeries(b), IntSeries(c)
        assert mul(mul(f, g), h) == mul(f, mul(g, h))

    @settings(max_examples=60)
    @given(coeff_lists, coeff_lists, coeff_lists)
    def test_distributive(self, a, b, c):
        f, g, h = IntSeries(a), IntSeries(b), IntSeries(c)
        assert mul(f, add(g, h)) == add(mul(f, g), mul(f, h))

    @settings(max_examples=100)
    @given(coeff_lists, coeff_lists)
    def test_mul_matches_brute_force(self, a, b):
        assert mul(IntSeries(a), IntSeries(b)).coefficients() == tuple(brute_mul(a, b))

    @settings(max_examples=100)
    @given(coeff_lists, st.sampled_from([1, -1]))
    def test_invert_round_trip(self, a, unit):
        a = [unit] + a[1:]
        f = IntSeries(a)
        assert mul(f, invert(f)) == one(f.order)

    @settings(max_examples=100)
    @given(
        st.sampled_from([1, -1]),
        st.integers(min_value=1, max_value=6),
        st.integers(min_value=1, max_value=4),
        st.integers(min_value=0, max_value=8),
        st.integers(min_value=0, max_value=80),
    )
    def test_poch_recurrence(self, sign, a, step, n, order):
        shorter = poch(sign, a, step, n, order)
        longer = poch(sign, a, step, n + 1, order)
        e = a + n * step
        factor = [0] * (order + 1)
        factor[0] = 1
        if e <= order:
            factor[e] = sign
        assert longer == mul(shorter, IntSeries(factor))

    @settings(max_examples=80)
    @given(coeff_lists, st.integers(min_value=-5, max_value=5), st.integers(min_value=0, max_value=10))
    def test_scale_shift_matches_monomial_mul(self, a, c, sh):
        f = IntSeries(a)
        mono = [0] * (f.order + 1)
        if sh <= f.order:
            mono[sh] = c
        assert scale_shift(f, c, sh) == mul(f, IntSeries(mono))


def test_zero_and_one():
    assert zero(3).coefficients() == (0, 0, 0, 0)
    assert one(0).coefficients() == (1,)
    f = make_series([4, -2, 7], 2)
    assert add(f, zero(2)) == f
    assert mul(f, one(2)) == f
