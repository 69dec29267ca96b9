"""
Integer invariants of the moduli spaces and their spectral geometry.

Everything here is a closed-form calculation on a compact Riemann surface X
of genus g >= 2: complex dimensions of the moduli spaces of bundles and Higgs
bundles, the dimension of the Hitchin base by Riemann-Roch, genus and
ramification of spectral curves by Riemann-Hurwitz, the degree shift of a
pushed-forward line bundle by Grothendieck-Riemann-Roch, Hilbert polynomials
of twisted bundles, and the Shatz partial order on Harder-Narasimhan types.

Slopes are exact rationals (fractions.Fraction); no floating point is used,
so order comparisons between types are exact.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import NamedTuple


class UnsupportedCombination(ValueError):
    """A (group, space) selector with no tabulated dimension formula."""


class IncompatibleTypes(ValueError):
    """Harder-Narasimhan types with different total rank or degree."""


_GROUPS = ("GL", "SL", "PGL")


@dataclasses.dataclass(frozen=True)
class ModuliParams:
    """
    The numerical parameters (rank, degree, genus, structure group) that
    every formula takes.  The genus is required to be at least 2, where the
    moduli problems have their full complexity.

    The Betti-number pipelines in `bundles` and `higgs` cover the rank-2,
    odd-degree case only; this record carries general (r, d) for the
    dimension and spectral calculators.
    """

    r: int
    d: int
    g: int
    group: str = "SL"

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("rank must be positive")
        if self.g < 2:
            raise ValueError("genus must be at least 2")
        group = self.group.upper()
        if group not in _GROUPS:
            raise UnsupportedCombination(f"unknown structure group {self.group!r}")
        object.__setattr__(self, "group", group)


_SPACE_ALIASES = {
    "bundles": "bundles",
    "higgs": "higgs",
    "betti": "higgs",
    "dolbeault": "higgs",
    "hitchin-base": "hitchin-base",
}


def moduli_dim(params: ModuliParams, space: str) -> int:
    """
    Complex dimension of a moduli space attached to (r, d, g, group).

    For bundles: dim = (g-1) r^2 + 1 for GL_r, and (r^2 - 1)(g-1) for SL_r.
    The Higgs (equivalently Betti / character variety) spaces are holomorphic
    symplectic and have exactly twice those dimensions.  The PGL_r spaces are
    finite quotients of the SL_r ones by the group of r-torsion line bundles,
    so their dimensions coincide with the SL_r values.  "hitchin-base" gives
    the dimension of the full Hitchin base for GL_r and of the reduced
    (traceless) base for SL_r and PGL_r.
    """
    try:
        space = _SPACE_ALIASES[space.lower()]
    except KeyError:
        raise UnsupportedCombination(f"unknown space {space!r}") from None
    r, g = params.r, params.g
    if space == "hitchin-base":
        return hitchin_base_dim(r, g, reduced=params.group != "GL")
    if params.group == "GL":
        base = (g - 1) * r * r + 1
    else:
        base = (r * r - 1) * (g - 1)
    return base if space == "bundles" else 2 * base


def hitchin_base_dim(r: int, g: int, reduced: bool = False) -> int:
    """
    Dimension of the Hitchin base, the direct sum of the spaces of
    holomorphic i-differentials for i = 1..r (or 2..r when reduced).

    By Riemann-Roch, h^0 of the i-th power of the canonical bundle, a line
    bundle of degree 2i(g-1), is g for i = 1 and, for i >= 2 where the degree
    exceeds 2g-2 and h^1 vanishes, 2i(g-1) + 1 - g = (2i-1)(g-1).  Summing
    gives half the dimension of the corresponding Higgs moduli space.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    if g < 2:
        raise ValueError("genus must be at least 2")
    total = 0
    for i in range(2 if reduced else 1, r + 1):
        total += g if i == 1 else (2 * i - 1) * (g - 1)
    return total


class SpectralNumbers(NamedTuple):
    ramification_degree: int
    spectral_genus: int
    line_degree_delta: int


def spectral_numbers(r: int, g: int, d: int) -> SpectralNumbers:
    """
    Numerical invariants of a smooth spectral curve Y over X for rank r.

    The characteristic-polynomial cover Y -> X inside the total space of the
    canonical bundle has ramification divisor of degree 2r(r-1)(g-1), hence
    by Riemann-Hurwitz genus g(Y) = r^2(g-1) + 1.  A line bundle L on Y
    pushes forward to a rank-r bundle on X whose degree is, by
    Grothendieck-Riemann-Roch, deg L + (1 - g(Y)) - r(1 - g); solving for
    deg L with prescribed pushforward degree d gives the shift delta.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    if g < 2:
        raise ValueError("genus must be at least 2")
    ram = 2 * r * (r - 1) * (g - 1)
    gy = r * r * (g - 1) + 1
    delta = d - (1 - gy) + r * (1 - g)
    return SpectralNumbers(ram, gy, delta)


def hilbert_poly(r: int, d: int, g: int, n: int) -> int:
    """
    Euler characteristic chi(E(n)) = d + r(n + 1 - g) of a twisted bundle of
    rank r and degree d on a genus-g curve (Riemann-Roch; the twist by O(n)
    adds rn to the degree).
    """
    if r < 1:
        raise ValueError("rank must be positive")
    if g < 2:
        raise ValueError("genus must be at least 2")
    return d + r * (n + 1 - g)


@dataclasses.dataclass(frozen=True)
class HNType:
    """
    A Harder-Narasimhan type: blocks (r_i, d_i) of the graded pieces of the
    canonical filtration, with strictly decreasing slopes d_i / r_i.
    """

    blocks: tuple[tuple[int, int], ...]

    def __init__(self, blocks):
        blocks = tuple((int(r), int(d)) for r, d in blocks)
        if not blocks:
            raise ValueError("a type needs at least one block")
        if any(r < 1 for r, _ in blocks):
            raise ValueError("block ranks must be positive")
        slopes = [Fraction(d, r) for r, d in blocks]
        if any(a <= b for a, b in zip(slopes, slopes[1:])):
            raise ValueError("slopes must be strictly decreasing")
        object.__setattr__(self, "blocks", blocks)

    def rank(self) -> int:
        return sum(r for r, _ in self.blocks)

    def degree(self) -> int:
        return sum(d for _, d in self.blocks)

    def slope_vector(self) -> tuple[Fraction, ...]:
        """Each block's slope repeated r_i times, a vector of length rank()."""
        out = []
        for r, d in self.blocks:
            out.extend([Fraction(d, r)] * r)
        return tuple(out)


def hn_leq(a: HNType, b: HNType) -> bool:
    """
    The Shatz partial order: a <= b iff every partial sum of the length-r
    slope vector of a is bounded by the one of b.  The full sums agree
    (total degree is fixed), so indices 1..r-1 decide.
    """
    if a.rank() != b.rank() or a.degree() != b.degree():
        raise IncompatibleTypes("types must share total rank and degree")
    pa, pb = Fraction(0), Fraction(0)
    for mu_a, mu_b in zip(a.slope_vector()[:-1], b.slope_vector()[:-1]):
        pa += mu_a
        pb += mu_b
        if pa > pb:
            return False
    return True


def hn_codim_rank2(g: int, k: int) -> int:
    """
    Complex codimension 2g + 4k - 4 of the stratum of holomorphic structures
    of Harder-Narasimhan type (k+1, -k) on a rank-2, degree-1 bundle.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    return 2 * g + 4 * k - 4
