"""
Betti numbers of the rank-2, odd-degree SL Higgs moduli space.

Let M-check denote the moduli space of stable SL_2 Higgs bundles of degree 1
on a genus-g curve, a holomorphic symplectic variety of complex dimension
6g - 6.  Its Poincare polynomial is computed by two independent routes:

* the Bialynicki-Birula stratified sum over the fixed loci of the circle
  action scaling the Higgs field.  The fixed locus F_0 is the bundle moduli
  space N-check; for k = 1 .. g-1 the fixed locus F_k is a 2^(2g)-cover of
  the kbar-th symmetric product of the curve, kbar = 2g - 2k - 1, attached
  with real codimension 2(g + 2k - 2).  Since the stratification is perfect,

      P_t(M-check) = P_t(N-check)
                     + sum_k t^(2(g+2k-2)) P_t(F_k).

  The Poincare polynomial of F_k splits into the part pulled back from the
  symmetric product (Macdonald's formula) plus the classes of the
  (2^(2g) - 1) nontrivial cover sectors.  Those classes span the kbar-th
  exterior power of the first cohomology of a 2-torsion local system, a
  space of dimension C(2g-2, kbar) concentrated in cohomological degree
  kbar, so they enter with weight t^kbar.  The count is sometimes stated
  without that weight; the weight is forced by where the classes live, and
  only with it does the stratified sum reproduce the closed form below.

* Hitchin's closed form: four rational terms whose series expansions are
  genuinely infinite individually but whose tails cancel in the sum.  The
  sum is expanded past degree 6g - 6 and the vanishing of every coefficient
  in the guard window is asserted; that cancellation is the correctness
  test of the transcription.
"""
from __future__ import annotations

import dataclasses
from math import comb

from .bundles import poincare_N_closed
from .exactpoly import IntPoly, TruncSeries, coeff_extract_x, poly_exact_div, series_expand

__all__ = [
    "StratumIndex",
    "DegreeOverflow",
    "fixed_locus_poincare",
    "bb_codimension",
    "poincare_M_stratified",
    "poincare_M_closed",
]


class DegreeOverflow(ArithmeticError):
    """A stratum contribution exceeded the middle-dimension degree bound."""


@dataclasses.dataclass(frozen=True)
class StratumIndex:
    """
    Index of a nontrivial fixed locus: k runs over 1 .. g-1, and the
    associated symmetric-product exponent is kbar = 2g - 2k - 1, an odd
    number between 1 and 2g - 3.  The exponent bookkeeping
    kbar + (g + 2k - 2) = 3g - 3 ties the stratum weights to the middle
    dimension.
    """

    g: int
    k: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("genus must be at least 2")
        if not 1 <= self.k <= self.g - 1:
            raise ValueError(f"k must lie in 1 .. {self.g - 1}")

    @property
    def kbar(self) -> int:
        return 2 * self.g - 2 * self.k - 1


def _stratum(g: int, k: int | StratumIndex) -> StratumIndex:
    return k if isinstance(k, StratumIndex) else StratumIndex(g, k)


def fixed_locus_poincare(g: int, k: int | StratumIndex) -> IntPoly:
    """
    Poincare polynomial of the fixed locus F_k:
    P_t(S^kbar X) + (2^(2g) - 1) C(2g-2, kbar) t^kbar.
    """
    s = _stratum(g, k)
    kbar = s.kbar
    covers = (2 ** (2 * g) - 1) * comb(2 * g - 2, kbar)
    return coeff_extract_x(g, kbar) + IntPoly.monomial(kbar, covers)


def bb_codimension(g: int, k: int | StratumIndex) -> int:
    """Real codimension 2(g + 2k - 2) of the stratum flowing down to F_k."""
    s = _stratum(g, k)
    return 2 * (s.g + 2 * s.k - 2)


def poincare_M_stratified(g: int) -> IntPoly:
    """
    The stratified sum: the bundle moduli contribution plus one shifted
    fixed-locus polynomial per k.  Every summand tops out at degree exactly
    6g - 6; anything larger is flagged as a bug.
    """
    total = poincare_N_closed(g)
    for k in range(1, g):
        total = total + fixed_locus_poincare(g, k).shift(bb_codimension(g, k))
    if total.degree() > 6 * g - 6:
        raise DegreeOverflow(f"degree {total.degree()} exceeds {6 * g - 6}")
    return total


_ONE_PLUS_T = IntPoly([1, 1])
_ONE_MINUS_T = IntPoly([1, -1])
_ONE_PLUS_T2 = IntPoly([1, 0, 1])
_ONE_PLUS_T3 = IntPoly([1, 0, 0, 1])
_ONE_MINUS_T2 = IntPoly([1, 0, -1])
_ONE_MINUS_T4 = IntPoly([1, 0, 0, 0, -1])


def poincare_M_closed(g: int, order: int | None = None) -> IntPoly:
    """
    Hitchin's closed form, summed as truncated series:

        (1+t^3)^(2g) / ((1-t^2)(1-t^4))
        - t^(4g-4) [(1+t^2)^2 (1+t)^(2g) - (1+t)^4 (1-t)^(2g)]
                                            / (4 (1-t^2)(1-t^4))
        - (g-1) t^(4g-3) (1+t)^(2g-2) / (1-t)
        + 2^(2g-1) t^(4g-4) [(1+t)^(2g-2) - (1-t)^(2g-2)].

    The bracket in the second term is divisible by 4 as an integer
    polynomial (both differences vanish mod 4), so every term is an integer
    series.  The default window runs a few degrees past 6g - 6 and the
    vanishing of all guard coefficients is asserted.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    window = 6 * g if order is None else order
    if window < 6 * g - 5:
        raise ValueError(f"truncation order must be at least {6 * g - 5} for genus {g}")
    denom = _ONE_MINUS_T2 * _ONE_MINUS_T4

    term1 = series_expand(_ONE_PLUS_T3 ** (2 * g), denom, window)

    bracket = _ONE_PLUS_T2 ** 2 * _ONE_PLUS_T ** (2 * g) - _ONE_PLUS_T ** 4 * _ONE_MINUS_T ** (2 * g)
    quarter = poly_exact_div(bracket, IntPoly([4]))
    term2 = -series_expand(quarter.shift(4 * g - 4), denom, window)

    term3 = -(g - 1) * series_expand((_ONE_PLUS_T ** (2 * g - 2)).shift(4 * g - 3), _ONE_MINUS_T, window)

    evens = _ONE_PLUS_T ** (2 * g - 2) - _ONE_MINUS_T ** (2 * g - 2)
    term4 = TruncSeries((evens * 2 ** (2 * g - 1)).shift(4 * g - 4), window)

    total = term1 + term2 + term3 + term4
    return total.polynomial_part(6 * g - 6)
