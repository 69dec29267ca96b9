"""
Combinatorial GIT stability: torus weight profiles and Hilbert-Mumford weights.

Three calculations, all in exact integer (or rational) arithmetic:

* torus_classify decides the GIT status of a point under a one-parameter
  torus action from the multiset of weights on its nonzero coordinates, by
  the limit analysis of the orbit at 0 and at infinity.  The inverse
  subgroup lambda -> 1/lambda negates the profile, so the classifier is
  symmetric under negation; this extends the familiar one-direction case
  analysis (which looks only at lambda -> 0) to profiles whose weights are
  all nonpositive.

* hm_weight evaluates the Hilbert-Mumford weight of a weighted filtration
  in its two standard forms,

      -sum_i a_i chi(G_i(m))
    = sum_(i<s) (a_(i+1) - a_i) [chi(E_i(m)) - (dim F_i / N) chi(E(m))],

  and asserts their agreement at runtime (they are equal exactly when the
  weights satisfy the special-linear constraint sum N_i a_i = 0).

* quotient_semistability_test evaluates the subspace inequality
  N'/chi(E'(m)) <= N/chi(E(m)) in cross-multiplied integer form.
"""
from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction
from typing import NamedTuple

from .geometry import hilbert_poly

__all__ = [
    "Stability",
    "WeightProfile",
    "Block",
    "FiltrationData",
    "EmptyProfile",
    "ExpressionMismatch",
    "NonIntegerWeight",
    "NonPositiveEuler",
    "torus_classify",
    "hm_weight",
    "quotient_semistability_test",
]


class EmptyProfile(ValueError):
    """A weight profile must be nonempty (a point has a nonzero lift)."""


class ExpressionMismatch(ArithmeticError):
    """The two forms of the Hilbert-Mumford weight disagreed (a bug)."""


class NonIntegerWeight(ArithmeticError):
    """The rational form of the weight failed to be an integer (a bug)."""


class NonPositiveEuler(ValueError):
    """chi(E(m)) must be positive; take the twist m large enough."""


class Stability(enum.Enum):
    UNSTABLE = "Unstable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    STRICTLY_POLYSTABLE = "StrictlyPolystable"
    STABLE = "Stable"


@dataclasses.dataclass(frozen=True)
class WeightProfile:
    """The multiset of torus weights appearing on the nonzero coordinates of a point."""

    weights: tuple[int, ...]

    def __init__(self, weights):
        weights = tuple(int(w) for w in weights)
        if not weights:
            raise EmptyProfile("a weight profile must be nonempty")
        object.__setattr__(self, "weights", weights)


def torus_classify(profile: WeightProfile) -> Stability:
    """
    Classify a point from its weight profile P.

    lim_(lambda->0) lambda.y exists iff min P >= 0 and is 0 iff min P > 0;
    lim_(lambda->inf) exists iff max P <= 0 and is 0 iff max P < 0.  Hence:
    all weights of one strict sign means 0 lies in the orbit closure
    (unstable); P = {0} is a fixed point with positive-dimensional
    stabilizer (strictly polystable); weights of both signs mean neither
    limit exists, so the orbit is closed with finite stabilizer (stable);
    and a profile touching 0 from one side only has a limit that is a
    nonzero fixed point outside the orbit (strictly semistable).
    """
    lo, hi = min(profile.weights), max(profile.weights)
    if lo > 0 or hi < 0:
        return Stability.UNSTABLE
    if lo == 0 and hi == 0:
        return Stability.STRICTLY_POLYSTABLE
    if lo < 0 < hi:
        return Stability.STABLE
    return Stability.STRICTLY_SEMISTABLE


class Block(NamedTuple):
    """One graded piece of a weighted filtration: dimension, weight, rank, degree."""

    N: int
    a: int
    r: int
    d: int


@dataclasses.dataclass(frozen=True)
class FiltrationData:
    """
    A weighted filtration of C^N with strictly decreasing integer weights
    a_1 > ... > a_s satisfying sum N_i a_i = 0 (a one-parameter subgroup of
    SL_N), each graded piece carrying the rank and degree of a sheaf whose
    Euler characteristics enter the weight.  The twist n records which
    embedding the filtration lives in; it does not enter the weight.
    """

    blocks: tuple[Block, ...]
    m: int
    g: int
    n: int | None = None

    def __init__(self, blocks, m: int, g: int, n: int | None = None):
        blocks = tuple(Block(*b) for b in blocks)
        if not blocks:
            raise ValueError("a filtration needs at least one block")
        if any(b.N < 1 for b in blocks):
            raise ValueError("block dimensions must be positive")
        if any(b.r < 1 for b in blocks):
            raise ValueError("block ranks must be positive")
        if any(x.a <= y.a for x, y in zip(blocks, blocks[1:])):
            raise ValueError("weights must be strictly decreasing")
        if sum(b.N * b.a for b in blocks) != 0:
            raise ValueError("weights must satisfy sum N_i a_i = 0")
        if g < 2:
            raise ValueError("genus must be at least 2")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "g", int(g))
        object.__setattr__(self, "n", None if n is None else int(n))

    @property
    def N(self) -> int:
        return sum(b.N for b in self.blocks)


def hm_weight(f: FiltrationData) -> int:
    """
    The Hilbert-Mumford weight of the filtration, computed as
    -sum a_i chi(G_i(m)) and re-derived through the partial-sum form as a
    runtime cross-check; the second form is assembled in exact rationals
    and must come out integral.
    """
    chis = [hilbert_poly(b.r, b.d, f.g, f.m) for b in f.blocks]
    first = -sum(b.a * chi for b, chi in zip(f.blocks, chis))

    total_chi = sum(chis)
    total_dim = f.N
    second = Fraction(0)
    partial_chi = 0
    partial_dim = 0
    for i in range(len(f.blocks) - 1):
        partial_chi += chis[i]
        partial_dim += f.blocks[i].N
        step = f.blocks[i + 1].a - f.blocks[i].a
        second += step * (partial_chi - Fraction(partial_dim, total_dim) * total_chi)
    if second.denominator != 1:
        raise NonIntegerWeight(f"partial-sum form gave {second}")
    if first != second:
        raise ExpressionMismatch(f"{first} != {second}")
    return first


def quotient_semistability_test(
    Nprime: int, rprime: int, dprime: int, N: int, r: int, d: int, g: int, m: int
) -> bool:
    """
    The subspace inequality N'/chi(E'(m)) <= N/chi(E(m)), evaluated as
    N' chi(E(m)) <= N chi(E'(m)) so no rationals appear.  Both Euler
    characteristics must be positive, which holds once m is large enough.
    """
    if Nprime < 0 or N < 1:
        raise ValueError("dimensions must be nonnegative, total positive")
    chi_sub = hilbert_poly(rprime, dprime, g, m)
    chi_total = hilbert_poly(r, d, g, m)
    if chi_sub <= 0 or chi_total <= 0:
        raise NonPositiveEuler(f"chi values {chi_sub}, {chi_total} must be positive")
    return Nprime * chi_total <= N * chi_sub
