"""
Exact polynomial and power-series arithmetic over the integers.

Everything downstream is bookkeeping with generating functions, so this module
is deliberately small and strict: dense integer polynomials in one variable t
(the carrier for Poincare polynomials), truncated power series in t (the
carrier for rational-function expansions whose tails must cancel), and sparse
integer polynomials in two variables u, v (the carrier for E-polynomials).
All coefficients are arbitrary-precision Python integers; there is no
floating point and no rounding anywhere.

A polynomial is represented by the tuple of its coefficients starting with
the constant term, so 1 - 2t + t^3 is IntPoly([1, -2, 0, 1]).  A truncated
series of order n knows the coefficients of t^0 .. t^(n-1) and nothing else;
binary operations keep the smaller of the two orders.

Exact division and series expansion share one convolution core that proceeds
from the constant term upward (every denominator we meet is 1 + higher order
terms, possibly times a power of t).  Division that leaves a remainder raises
NonDivisible instead of returning an approximation.
"""
from __future__ import annotations

import dataclasses
import itertools
from math import comb


class NonDivisible(ArithmeticError):
    """Exact division failed: the quotient would not have integer polynomial form."""


class ZeroConstantTerm(ArithmeticError):
    """The denominator is not invertible as a power series (constant term zero)."""


class TailNonzero(ArithmeticError):
    """A series that should have stabilized to a polynomial kept nonzero terms."""


@dataclasses.dataclass(init=False, eq=True, frozen=True)
class IntPoly:
    """
    A dense polynomial in t with integer coefficients, trailing zeros trimmed.

    >>> IntPoly([1, 0, 1, 4])
    IntPoly('4t^3 + t^2 + 1')
    >>> IntPoly([0, 0]).is_zero()
    True
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients only, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def monomial(exponent: int, coeff: int = 1) -> IntPoly:
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return IntPoly([0] * exponent + [coeff])

    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient; -1 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def evaluate(self, x):
        """
        Evaluate at a point, which may be an int or a Fraction.

        >>> IntPoly([1, 0, 1, 4, 1, 0, 1]).evaluate(1)
        8
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def truncate(self, order: int) -> IntPoly:
        """Drop all terms of degree >= order."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        return IntPoly(self.coeffs[:order])

    def shift(self, k: int) -> IntPoly:
        """Multiply by t^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def is_palindromic(self) -> bool:
        """Whether the coefficient sequence reads the same in both directions."""
        return self.coeffs == self.coeffs[::-1]

    def to_coeff_list(self) -> list[int]:
        """Coefficients as a plain list, index = exponent (JSON-friendly)."""
        return list(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly('0')"
        parts = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            term = "" if i == 0 else "t" if i == 1 else f"t^{i}"
            coeff = f"{abs(c)}" if (i == 0 or abs(c) != 1) else ""
            parts.append(sign + coeff + term)
        return f"IntPoly('{''.join(parts)}')"

    def __add__(self, other: int | IntPoly) -> IntPoly:
        coeffs = (other,) if isinstance(other, int) else other.coeffs
        return IntPoly(a + b for a, b in itertools.zip_longest(self.coeffs, coeffs, fillvalue=0))

    def __sub__(self, other: int | IntPoly) -> IntPoly:
        coeffs = (other,) if isinstance(other, int) else other.coeffs
        return IntPoly(a - b for a, b in itertools.zip_longest(self.coeffs, coeffs, fillvalue=0))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: int | IntPoly) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(other.coeffs):
                out[i + j] += c * d
        return IntPoly(out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


ONE = IntPoly([1])
T = IntPoly([0, 1])


@dataclasses.dataclass(init=False, eq=True, frozen=True)
class TruncSeries:
    """
    A power series in t known modulo t^order.

    The polynomial part always satisfies degree < order; coefficients at or
    beyond the order are unknown, and asking for them is an error rather than
    a silent zero.  Binary operations return the smaller of the two orders,
    since that is all that both operands determine.
    """

    poly: IntPoly
    order: int

    def __init__(self, poly: IntPoly, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        object.__setattr__(self, "poly", poly.truncate(order))
        object.__setattr__(self, "order", order)

    def coefficient(self, i: int) -> int:
        if not 0 <= i < self.order:
            raise IndexError(f"coefficient of t^{i} is not determined at order {self.order}")
        return self.poly.coefficient(i)

    def polynomial_part(self, max_degree: int) -> IntPoly:
        """
        The series as an exact polynomial of degree <= max_degree.

        Every known coefficient above max_degree must vanish; a nonzero one
        means the expected tail cancellation did not happen.
        """
        for i in range(max_degree + 1, self.order):
            if self.poly.coefficient(i) != 0:
                raise TailNonzero(
                    f"coefficient {self.poly.coefficient(i)} at t^{i} past degree {max_degree}"
                )
        return self.poly.truncate(max_degree + 1)

    def __add__(self, other: TruncSeries) -> TruncSeries:
        return TruncSeries(self.poly + other.poly, min(self.order, other.order))

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return TruncSeries(self.poly - other.poly, min(self.order, other.order))

    def __neg__(self) -> TruncSeries:
        return TruncSeries(-self.poly, self.order)

    def __mul__(self, other: int | IntPoly | TruncSeries) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return TruncSeries(self.poly * other.poly, min(self.order, other.order))
        return TruncSeries(self.poly * other, self.order)

    __rmul__ = __mul__


def _quotient_coeffs(num: IntPoly, den: IntPoly, count: int) -> list[int]:
    """
    First `count` coefficients of num/den as a power series, exact at every step.

    Shared core of poly_exact_div and series_expand: coefficient i of the
    quotient is solved from the convolution (quotient * den)_i = num_i.
    """
    d0 = den.coefficient(0)
    if d0 == 0:
        raise ZeroConstantTerm("series division needs a denominator with nonzero constant term")
    ddeg = den.degree()
    out: list[int] = []
    for i in range(count):
        acc = num.coefficient(i)
        for j in range(max(0, i - ddeg), i):
            acc -= out[j] * den.coefficient(i - j)
        q, r = divmod(acc, d0)
        if r != 0:
            raise NonDivisible(f"coefficient {acc} of t^{i} is not divisible by {d0}")
        out.append(q)
    return out


def poly_exact_div(numerator: IntPoly, denominator: IntPoly) -> IntPoly:
    """
    Divide exactly, raising NonDivisible if the quotient is not a polynomial.

    >>> poly_exact_div(IntPoly([1, 0, 0, 0, -1]), IntPoly([1, 0, -1]))
    IntPoly('t^2 + 1')
    >>> poly_exact_div(IntPoly([1, 1]), IntPoly([1, -1]))
    Traceback (most recent call last):
        ...
    higgsmoduli.exactpoly.NonDivisible: remainder is nonzero
    """
    if denominator.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if numerator.is_zero():
        return IntPoly()
    # Strip a common power of t so that division can start at the constant term.
    val = denominator.valuation()
    if val > 0:
        if numerator.valuation() < val:
            raise NonDivisible("denominator has higher valuation than numerator")
        numerator = IntPoly(numerator.coeffs[val:])
        denominator = IntPoly(denominator.coeffs[val:])
    count = numerator.degree() - denominator.degree() + 1
    if count <= 0:
        raise NonDivisible("numerator has lower degree than denominator")
    quotient = IntPoly(_quotient_coeffs(numerator, denominator, count))
    if quotient * denominator != numerator:
        raise NonDivisible("remainder is nonzero")
    return quotient


def series_expand(numerator: IntPoly, denominator: IntPoly, order: int) -> TruncSeries:
    """
    Expand numerator/denominator as a power series modulo t^order.

    >>> series_expand(IntPoly([1]), IntPoly([1, -1]), 4).poly
    IntPoly('t^3 + t^2 + t + 1')
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    return TruncSeries(IntPoly(_quotient_coeffs(numerator, denominator, order)), order)


def coeff_extract_x(g: int, n: int) -> IntPoly:
    """
    Coefficient of x^n in (1 + xt)^(2g) / ((1 - x)(1 - x t^2)), as a polynomial in t.

    This is Macdonald's formula: the result is the Poincare polynomial of the
    n-th symmetric product of a genus-g curve.  Expanding all three factors
    and collecting x^n gives the convolution

        sum over a + b + c = n of  C(2g, c) t^(c + 2b),

    which is what is computed here, term by term, in exact integers.

    >>> coeff_extract_x(2, 1)
    IntPoly('t^2 + 4t + 1')
    """
    if g < 0 or n < 0:
        raise ValueError("g and n must be nonnegative")
    out = [0] * (2 * n + 1)
    for c in range(min(n, 2 * g) + 1):
        binom = comb(2 * g, c)
        for b in range(n - c + 1):
            out[c + 2 * b] += binom
    return IntPoly(out)


def bivar_eval_signed_binomial(g: int, sign_u: int, sign_v: int) -> BivarPoly:
    """
    The expansion of (1 + sign_u u)^(g-1) (1 + sign_v v)^(g-1).

    The coefficient of u^p v^q is C(g-1, p) C(g-1, q) times the signs; these
    are the Hodge numbers of a (g-1)-dimensional abelian variety.
    """
    if g < 2:
        raise ValueError("g must be at least 2")
    if sign_u not in (1, -1) or sign_v not in (1, -1):
        raise ValueError("signs must be +1 or -1")
    coeffs = {}
    for p in range(g):
        for q in range(g):
            coeffs[(p, q)] = comb(g - 1, p) * comb(g - 1, q) * sign_u**p * sign_v**q
    return BivarPoly(coeffs)


@dataclasses.dataclass(init=False, eq=True)
class BivarPoly:
    """
    A sparse polynomial in u and v with integer coefficients.

    The coefficient map never stores zeros, so equality of maps is equality
    of polynomials.
    """

    coeffs: dict[tuple[int, int], int]

    def __init__(self, coeffs=None):
        clean: dict[tuple[int, int], int] = {}
        for (p, q), c in (coeffs or {}).items():
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients only, got {c!r}")
            if p < 0 or q < 0:
                raise ValueError("exponents must be nonnegative")
            if c != 0:
                clean[(int(p), int(q))] = c
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, p: int, q: int) -> int:
        return self.coeffs.get((p, q), 0)

    def total_degree(self) -> int:
        return max((p + q for p, q in self.coeffs), default=-1)

    def monomials(self):
        """Items in a stable (sorted) order."""
        return sorted(self.coeffs.items())

    def evaluate(self, u_val: int, v_val: int) -> int:
        return sum(c * u_val**p * v_val**q for (p, q), c in self.coeffs.items())

    def sign_twist(self) -> BivarPoly:
        """Substitute (u, v) -> (-u, -v): each monomial picks up (-1)^(p+q)."""
        return BivarPoly({(p, q): c if (p + q) % 2 == 0 else -c for (p, q), c in self.coeffs.items()})

    def shift_uv(self, k: int) -> BivarPoly:
        """Multiply by (uv)^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return BivarPoly({(p + k, q + k): c for (p, q), c in self.coeffs.items()})

    def divide_exact(self, divisor: int) -> BivarPoly:
        out = {}
        for (p, q), c in self.coeffs.items():
            quot, rem = divmod(c, divisor)
            if rem != 0:
                raise NonDivisible(f"coefficient {c} of u^{p} v^{q} is not divisible by {divisor}")
            out[(p, q)] = quot
        return BivarPoly(out)

    def to_sorted_dict(self) -> dict[str, int]:
        """Keys "p,q" in sorted exponent order (JSON-friendly)."""
        return {f"{p},{q}": c for (p, q), c in self.monomials()}

    def __repr__(self):
        if not self.coeffs:
            return "BivarPoly('0')"
        parts = []
        for (p, q), c in self.monomials():
            term = "".join(
                [f"u^{p}" if p > 1 else "u" if p == 1 else "", f"v^{q}" if q > 1 else "v" if q == 1 else ""]
            ) or "1"
            parts.append(f"{c:+d} {term}")
        return f"BivarPoly('{' '.join(parts)}')"

    def __add__(self, other: BivarPoly) -> BivarPoly:
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return BivarPoly(out)

    def __sub__(self, other: BivarPoly) -> BivarPoly:
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) - c
        return BivarPoly(out)

    def __neg__(self) -> BivarPoly:
        return BivarPoly({key: -c for key, c in self.coeffs.items()})

    def __mul__(self, other: int | BivarPoly) -> BivarPoly:
        if isinstance(other, int):
            return BivarPoly({key: c * other for key, c in self.coeffs.items()})
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self.coeffs.items():
            for (p2, q2), c2 in other.coeffs.items():
                key = (p1 + p2, q1 + q2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__
