"""Exact-arithmetic kernel: polynomials, truncated series, bivariate polynomials."""
import doctest
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import higgsmoduli.exactpoly as exactpoly
from higgsmoduli.exactpoly import (
    BivarPoly,
    IntPoly,
    NonDivisible,
    TailNonzero,
    TruncSeries,
    ZeroConstantTerm,
    bivar_eval_signed_binomial,
    coeff_extract_x,
    poly_exact_div,
    series_expand,
)

ONE_PLUS_T = IntPoly([1, 1])
ONE_MINUS_T = IntPoly([1, -1])


def test_doctests():
    failures, _ = doctest.testmod(exactpoly)
    assert failures == 0


class TestIntPoly:
    def test_trailing_zeros_trimmed(self):
        assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
        assert IntPoly([0, 0]).is_zero()
        assert IntPoly([]).is_zero()

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            IntPoly([1.5])
        with pytest.raises(TypeError):
            IntPoly([1, "2"])

    def test_degree_and_valuation(self):
        p = IntPoly([0, 0, 3, 0, 5])
        assert p.degree() == 4
        assert p.valuation() == 2
        assert IntPoly([]).degree() == -1

    def test_monomial(self):
        assert IntPoly.monomial(3) == IntPoly([0, 0, 0, 1])
        assert IntPoly.monomial(0, 7) == IntPoly([7])

    def test_arithmetic(self):
        p, q = IntPoly([1, 2]), IntPoly([3, 0, 1])
        assert p + q == IntPoly([4, 2, 1])
        assert p - p == IntPoly([])
        assert p * q == IntPoly([3, 6, 1, 2])
        assert p * 0 == IntPoly([])
        assert -p == IntPoly([-1, -2])

    def test_pow(self):
        assert ONE_PLUS_T**4 == IntPoly([1, 4, 6, 4, 1])
        assert ONE_PLUS_T**0 == IntPoly([1])
        with pytest.raises(ValueError):
            ONE_PLUS_T ** (-1)

    def test_evaluate(self):
        p = IntPoly([1, 0, 1, 4, 1, 0, 1])
        assert p.evaluate(1) == 8
        assert p.evaluate(-1) == 0
        assert p.evaluate(0) == 1

    def test_shift_and_truncate(self):
        p = IntPoly([1, 2, 3])
        assert p.shift(2) == IntPoly([0, 0, 1, 2, 3])
        assert p.truncate(2) == IntPoly([1, 2])
        assert p.truncate(0) == IntPoly([])

    def test_palindromic(self):
        assert IntPoly([1, 0, 1, 4, 1, 0, 1]).is_palindromic()
        assert not IntPoly([1, 2]).is_palindromic()
        assert IntPoly([]).is_palindromic()


class TestPolyExactDiv:
    def test_moduli_closed_form_g2(self):
        # [(1+t^3)^4 - t^4 (1+t)^4] / [(1-t^2)(1-t^4)] = 1 + t^2 + 4t^3 + t^4 + t^6
        num = IntPoly([1, 0, 0, 1]) ** 4 - IntPoly.monomial(4) * ONE_PLUS_T**4
        den = IntPoly([1, 0, -1]) * IntPoly([1, 0, 0, 0, -1])
        assert poly_exact_div(num, den) == IntPoly([1, 0, 1, 4, 1, 0, 1])

    def test_binomial_quotient(self):
        assert poly_exact_div(ONE_PLUS_T**4, ONE_PLUS_T**2) == ONE_PLUS_T**2

    def test_common_valuation_stripped(self):
        assert poly_exact_div(IntPoly([0, 0, 2, 2]), IntPoly([0, 2])) == IntPoly([0, 1, 1])

    def test_non_divisible(self):
        with pytest.raises(NonDivisible):
            poly_exact_div(ONE_PLUS_T, ONE_MINUS_T)
        with pytest.raises(NonDivisible):
            poly_exact_div(IntPoly([1, 1, 1]), IntPoly([2]))
        with pytest.raises(NonDivisible):
            poly_exact_div(IntPoly([1]), ONE_PLUS_T)  # degree too low
        with pytest.raises(NonDivisible):
            poly_exact_div(IntPoly([0, 1]), IntPoly([0, 0, 1]))  # valuation too low

    def test_zero_cases(self):
        assert poly_exact_div(IntPoly([]), ONE_PLUS_T) == IntPoly([])
        with pytest.raises(ZeroDivisionError):
            poly_exact_div(ONE_PLUS_T, IntPoly([]))

    @given(
        st.lists(st.integers(-9, 9), min_size=1, max_size=6),
        st.lists(st.integers(-9, 9), min_size=1, max_size=6),
    )
    def test_multiply_then_divide_round_trips(self, a, b):
        pa, pb = IntPoly(a), IntPoly(b)
        if pb.is_zero():
            return
        assert poly_exact_div(pa * pb, pb) == pa


class TestTruncSeries:
    def test_geometric_like_expansion(self):
        # (1+t)^2 / (1-t) = 1 + 3t + 4t^2 + 4t^3 + 4t^4 + ...
        s = series_expand(ONE_PLUS_T**2, ONE_MINUS_T, 5)
        assert [s.coefficient(i) for i in range(5)] == [1, 3, 4, 4, 4]

    def test_zero_constant_term(self):
        with pytest.raises(ZeroConstantTerm):
            series_expand(ONE_PLUS_T, IntPoly([0, 1]), 3)

    def test_coefficient_past_order(self):
        s = series_expand(ONE_PLUS_T, ONE_MINUS_T, 3)
        with pytest.raises(IndexError):
            s.coefficient(3)

    def test_order_zero_is_empty(self):
        s = series_expand(ONE_PLUS_T, ONE_MINUS_T, 0)
        assert s.order == 0
        with pytest.raises(IndexError):
            s.coefficient(0)

    def test_min_order_on_binary_ops(self):
        a = TruncSeries(ONE_PLUS_T, 5)
        b = TruncSeries(ONE_PLUS_T, 3)
        assert (a + b).order == 3
        assert (a * b).order == 3
        assert (a - b).order == 3

    def test_polynomial_part_guard(self):
        s = series_expand(ONE_PLUS_T, ONE_MINUS_T, 6)
        with pytest.raises(TailNonzero):
            s.polynomial_part(2)
        exact = TruncSeries(IntPoly([1, 2]), 6)
        assert exact.polynomial_part(3) == IntPoly([1, 2])

    def test_series_multiplication_matches_polynomial(self):
        p, q = IntPoly([1, 2, 3]), IntPoly([4, 0, 5])
        s = TruncSeries(p, 4) * TruncSeries(q, 4)
        assert s.poly == (p * q).truncate(4)

    @given(
        st.lists(st.integers(-9, 9), min_size=1, max_size=5),
        st.lists(st.integers(-9, 9), min_size=1, max_size=5).map(
            lambda c: [1 if c[0] >= 0 else -1] + c[1:]
        ),
        st.integers(1, 12),
    )
    @settings(max_examples=60)
    def test_expansion_times_denominator_recovers_numerator(self, num, den, order):
        pn, pd = IntPoly(num), IntPoly(den)
        s = series_expand(pn, pd, order)
        product = (s.poly * pd).truncate(order)
        assert product == pn.truncate(order)

    @given(
        st.lists(st.integers(-9, 9), min_size=1, max_size=5),
        st.lists(st.integers(-9, 9), min_size=1, max_size=5).map(
            lambda c: [1 if c[0] >= 0 else -1] + c[1:]
        ),
        st.integers(1, 8),
        st.integers(1, 8),
    )
    @settings(max_examples=60)
    def test_truncation_consistency(self, num, den, o1, o2):
        # expanding further and then truncating matches the shorter expansion
        lo, hi = sorted((o1, o2))
        pn, pd = IntPoly(num), IntPoly(den)
        short = series_expand(pn, pd, lo)
        long = series_expand(pn, pd, hi)
        assert long.poly.truncate(lo) == short.poly


class TestCoeffExtract:
    def test_frozen_examples(self):
        assert coeff_extract_x(2, 1) == IntPoly([1, 4, 1])
        assert coeff_extract_x(3, 3) == IntPoly([1, 6, 16, 26, 16, 6, 1])
        assert coeff_extract_x(2, 0) == IntPoly([1])

    def test_validation(self):
        with pytest.raises(ValueError):
            coeff_extract_x(-1, 2)
        with pytest.raises(ValueError):
            coeff_extract_x(2, -1)

    @given(st.integers(2, 6), st.integers(0, 8))
    @settings(max_examples=40)
    def test_palindromic_about_n(self, g, n):
        p = coeff_extract_x(g, n)
        assert p.degree() <= 2 * n
        coeffs = p.to_coeff_list() + [0] * (2 * n + 1 - len(p.to_coeff_list()))
        assert coeffs == coeffs[::-1]

    @given(st.integers(2, 6), st.integers(0, 8))
    @settings(max_examples=40)
    def test_euler_characteristic(self, g, n):
        # chi(S^n X) = (-1)^n C(2g-2, n)
        assert coeff_extract_x(g, n).evaluate(-1) == (-1) ** n * math.comb(
            2 * g - 2, n
        )

    @given(st.integers(2, 6), st.integers(0, 8))
    @settings(max_examples=40)
    def test_nonnegative_coefficients(self, g, n):
        assert all(c >= 0 for c in coeff_extract_x(g, n).to_coeff_list())

    @given(st.integers(2, 5), st.integers(0, 6))
    @settings(max_examples=30)
    def test_against_brute_force_series(self, g, n):
        # [x^n] (1+xt)^{2g} / ((1-x)(1-x t^2)) by direct convolution in x
        order = n + 1
        coeffs_x = [IntPoly([]) for _ in range(order)]
        for c in range(min(n, 2 * g) + 1):
            coeffs_x[c] = IntPoly.monomial(c, math.comb(2 * g, c))
        # multiply by sum_j x^j and then by sum_j (x t^2)^j
        acc = [IntPoly([]) for _ in range(order)]
        for i in range(order):
            for j in range(order - i):
                acc[i + j] = acc[i + j] + coeffs_x[i]
        acc2 = [IntPoly([]) for _ in range(order)]
        for i in range(order):
            for j in range(order - i):
                acc2[i + j] = acc2[i + j] + acc[i] * IntPoly.monomial(2 * j)
        assert acc2[n] == coeff_extract_x(g, n)


class TestBivarPoly:
    def test_no_stored_zeros(self):
        p = BivarPoly({(0, 0): 1, (1, 1): 0})
        assert p == BivarPoly({(0, 0): 1})
        assert p.coefficient(1, 1) == 0

    def test_arithmetic(self):
        p = BivarPoly({(1, 0): 2, (0, 1): 3})
        q = BivarPoly({(1, 0): -2})
        assert (p + q) == BivarPoly({(0, 1): 3})
        assert (p - p) == BivarPoly({})
        assert p * q == BivarPoly({(2, 0): -4, (1, 1): -6})
        assert p * 2 == BivarPoly({(1, 0): 4, (0, 1): 6})

    def test_sign_twist(self):
        p = BivarPoly({(1, 0): 1, (1, 1): 5, (2, 1): 7})
        assert p.sign_twist() == BivarPoly({(1, 0): -1, (1, 1): 5, (2, 1): -7})

    def test_shift_uv(self):
        p = BivarPoly({(1, 0): 1})
        assert p.shift_uv(2) == BivarPoly({(3, 2): 1})

    def test_divide_exact(self):
        p = BivarPoly({(0, 0): 4, (1, 2): -8})
        assert p.divide_exact(4) == BivarPoly({(0, 0): 1, (1, 2): -2})
        with pytest.raises(NonDivisible):
            p.divide_exact(3)

    def test_evaluate_and_total_degree(self):
        p = BivarPoly({(2, 1): 3, (0, 0): 1})
        assert p.evaluate(2, 5) == 3 * 4 * 5 + 1
        assert p.total_degree() == 3

    def test_signed_binomial(self):
        # (1+u)^{g-1} (1+v)^{g-1} expanded, g=3
        p = bivar_eval_signed_binomial(3, 1, 1)
        assert p.coefficient(0, 0) == 1
        assert p.coefficient(1, 0) == 2
        assert p.coefficient(1, 2) == 2
        assert p.coefficient(2, 2) == 1
        m = bivar_eval_signed_binomial(3, -1, 1)
        assert m.coefficient(1, 0) == -2
        assert m.coefficient(2, 0) == 1
        with pytest.raises(ValueError):
            bivar_eval_signed_binomial(3, 2, 1)
        with pytest.raises(ValueError):
            bivar_eval_signed_binomial(1, 1, 1)

    def test_to_sorted_dict(self):
        p = BivarPoly({(10, 3): 1, (2, 1): -2})
        assert p.to_sorted_dict() == {"2,1": -2, "10,3": 1}
