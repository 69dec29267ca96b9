"""Higgs moduli: Bialynicki-Birula stratified sum vs the four-term closed form."""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higgsmoduli.bundles import poincare_N_closed
from higgsmoduli.exactpoly import IntPoly
from higgsmoduli.higgs import (
    DegreeOverflow,
    StratumIndex,
    bb_codimension,
    fixed_locus_poincare,
    poincare_M_closed,
    poincare_M_stratified,
)

M_G2 = IntPoly([1, 0, 1, 4, 2, 34, 2])


class TestStratumIndex:
    def test_valid_range(self):
        s = StratumIndex(3, 2)
        assert s.kbar == 2 * 3 - 2 * 2 - 1 == 1

    def test_invalid(self):
        with pytest.raises(ValueError):
            StratumIndex(2, 0)
        with pytest.raises(ValueError):
            StratumIndex(2, 2)  # k must stay below g
        with pytest.raises(ValueError):
            StratumIndex(1, 1)


class TestFixedLoci:
    def test_frozen_examples(self):
        assert fixed_locus_poincare(2, 1) == IntPoly([1, 34, 1])
        assert fixed_locus_poincare(3, 2) == IntPoly([1, 258, 1])
        assert fixed_locus_poincare(3, 1) == IntPoly([1, 6, 16, 278, 16, 6, 1])

    def test_middle_coefficient_carries_the_point_count(self):
        # the 2^{2g}-1 extra middle classes sit in degree kbar
        g, k = 2, 1
        kbar = 2 * g - 2 * k - 1
        from higgsmoduli.exactpoly import coeff_extract_x

        sym = coeff_extract_x(g, kbar)
        extra = (2 ** (2 * g) - 1) * math.comb(2 * g - 2, kbar)
        assert fixed_locus_poincare(g, k).coefficient(kbar) == sym.coefficient(kbar) + extra

    @given(st.integers(2, 7).flatmap(lambda g: st.tuples(st.just(g), st.integers(1, g - 1))))
    @settings(max_examples=25)
    def test_palindromic_about_kbar(self, gk):
        g, k = gk
        p = fixed_locus_poincare(g, k)
        kbar = 2 * g - 2 * k - 1
        assert p.degree() == 2 * kbar
        assert p.is_palindromic()


class TestCodimension:
    def test_frozen_examples(self):
        assert bb_codimension(2, 1) == 4
        assert bb_codimension(3, 1) == 6
        assert bb_codimension(3, 2) == 10

    def test_every_stratum_tops_out_at_the_space_dimension(self):
        # shift + fixed-locus degree: 2(g+2k-2) + 2(2g-2k-1) = 6g-6 for all k
        for g in range(2, 8):
            for k in range(1, g):
                kbar = 2 * g - 2 * k - 1
                assert bb_codimension(g, k) + 2 * kbar == 6 * g - 6


class TestStratifiedSum:
    def test_genus_two(self):
        p = poincare_M_stratified(2)
        assert p == M_G2
        assert p.evaluate(1) == 44

    def test_term_weights_genus_two(self):
        # N contributes t^5 coefficient 0; the k=1 fixed locus enters at t^4
        # with weight t^1 on the middle class: 34 = middle coefficient
        n = poincare_N_closed(2)
        p = poincare_M_stratified(2)
        assert p.coefficient(5) - n.coefficient(5) == 34
        assert p.coefficient(4) - n.coefficient(4) == 1

    def test_agrees_with_bundle_moduli_below_first_stratum(self):
        # strata enter at degree 2g; below that M looks like N
        for g in range(2, 6):
            n, m = poincare_N_closed(g), poincare_M_stratified(g)
            for i in range(2 * g):
                assert m.coefficient(i) == n.coefficient(i)

    def test_degree(self):
        for g in range(2, 6):
            assert poincare_M_stratified(g).degree() == 6 * g - 6


class TestClosedForm:
    def test_genus_two(self):
        assert poincare_M_closed(2) == M_G2

    def test_closed_t5_coefficient_genus_two(self):
        # the lone odd-degree survivor at g=2: 34 from strata, 32 of it from
        # the two point-count terms of the closed form
        assert poincare_M_closed(2).coefficient(5) == 34

    def test_matches_stratified(self):
        for g in range(2, 6):
            assert poincare_M_closed(g) == poincare_M_stratified(g)

    def test_larger_order_same_answer(self):
        assert poincare_M_closed(3, order=25) == poincare_M_closed(3)

    def test_order_too_small_rejected(self):
        with pytest.raises(ValueError):
            poincare_M_closed(2, order=4)

    def test_genus_validation(self):
        with pytest.raises(ValueError):
            poincare_M_closed(1)
        with pytest.raises(ValueError):
            poincare_M_stratified(1)


class TestEulerNumbers:
    @given(st.integers(2, 6))
    @settings(max_examples=5, deadline=None)
    def test_euler_characteristic_identity(self, g):
        # at t = -1 each symmetric product contributes (-1)^kbar C(2g-2,kbar)
        # with kbar odd, so chi(M) = chi(N) - 2^{2g} sum_odd C(2g-2,*)
        #                          = chi(N) - 2^{4g-3}
        chi_n = poincare_N_closed(g).evaluate(-1)
        chi_m = poincare_M_stratified(g).evaluate(-1)
        assert chi_m == chi_n - 2 ** (4 * g - 3)

    def test_euler_number_genus_two(self):
        # 1 - 0 + 1 - 4 + 2 - 34 + 2 = -32
        assert poincare_M_stratified(2).evaluate(-1) == -32
