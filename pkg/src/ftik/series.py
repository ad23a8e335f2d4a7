"""Exact polynomial and truncated power-series arithmetic over rationals.

Three value types cover everything the invariant pipeline needs:

* ``IntLaurent`` -- Laurent polynomials with integer exponents (Kauffman
  bracket values in A, Conway polynomials in z).
* ``HalfLaurent`` -- Laurent polynomials with half-integer exponents,
  stored as integer numbers of halves (Jones-type values in t^(1/2)).
* ``TruncSeries`` -- Taylor expansions in u = t - 1, truncated at a fixed
  order, used to extract derivatives at t = 1 and (after reparametrising
  by u = e^h - 1) at h = 0.

All coefficients are ``fractions.Fraction``; nothing here ever rounds.
Values are immutable, so everything in this module is safe to share
between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import SingularSeriesError, TruncationError

RationalLike = Union[int, Fraction]


def _fr(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Laurent:
    """Shared implementation of exact single-variable Laurent polynomials.

    ``terms`` maps exponent -> coefficient, stored as a sorted tuple of
    pairs with no zero coefficients.  Subclasses fix the interpretation of
    the exponent (integers vs. half-integers counted in halves).
    """

    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, RationalLike]):
        items = tuple(sorted((e, _fr(c)) for e, c in d.items() if _fr(c) != 0))
        return cls(items)

    @classmethod
    def monomial(cls, exponent: int, coeff: RationalLike = 1):
        return cls.from_dict({exponent: coeff})

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls.from_dict({0: 1})

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exponent: int) -> Fraction:
        for e, c in self.terms:
            if e == exponent:
                return c
        return Fraction(0)

    def __add__(self, other):
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, Fraction(0)) + c
        return type(self).from_dict(d)

    def __sub__(self, other):
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, Fraction(0)) - c
        return type(self).from_dict(d)

    def __neg__(self):
        return type(self)(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other):
        d: dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                d[e] = d.get(e, Fraction(0)) + c1 * c2
        return type(self).from_dict(d)

    def scale(self, k: RationalLike):
        k = _fr(k)
        if k == 0:
            return type(self)(())
        return type(self)(tuple((e, c * k) for e, c in self.terms))

    def shift(self, exponent: int):
        """Multiply by the monomial with the given exponent."""
        return type(self)(tuple((e + exponent, c) for e, c in self.terms))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials are not defined here")
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_exact(self, divisor):
        """Exact division; raises ``SingularSeriesError`` if the division
        leaves a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return type(self)(())
        rem = self.as_dict()
        dlead_e, dlead_c = divisor.terms[-1]
        # An exact quotient cannot reach below the difference of the lowest
        # exponents; descending past that bound means inexact division.
        min_q_e = self.terms[0][0] - divisor.terms[0][0]
        quot: dict[int, Fraction] = {}
        while rem:
            e = max(rem)
            q_e = e - dlead_e
            if q_e < min_q_e:
                raise SingularSeriesError("inexact Laurent division")
            q_c = rem[e] / dlead_c
            quot[q_e] = q_c
            for de, dc in divisor.terms:
                key = de + q_e
                v = rem.get(key, Fraction(0)) - dc * q_c
                if v == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = v
        for e in list(quot):
            if quot[e] == 0:
                del quot[e]
        check = type(self).from_dict(quot) * divisor
        if check != self:
            raise SingularSeriesError("inexact Laurent division")
        return type(self).from_dict(quot)


class IntLaurent(_Laurent):
    """Laurent polynomial with integer exponents."""


# Conway polynomials live in z with integer exponents; same representation.
ZLaurent = IntLaurent


class HalfLaurent(_Laurent):
    """Laurent polynomial whose exponents are half-integers, stored in halves.

    The key ``h`` represents the monomial x^(h/2); keeping the doubled
    exponent as an integer keeps arithmetic exact and orderable.
    """

    @classmethod
    def from_int_exponents(cls, p: IntLaurent) -> "HalfLaurent":
        """Reinterpret integer exponents e as whole powers x^e (stored as 2e halves)."""
        return cls(tuple((2 * e, c) for e, c in p.terms))


def format_rational(x: Fraction) -> str:
    x = _fr(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _format_exponent_halves(h: int) -> str:
    if h % 2 == 0:
        return str(h // 2)
    return f"({h}/2)"


def format_laurent(p: _Laurent, variable: str) -> str:
    """Canonical ascending-exponent text form, e.g. ``-t^-4 + t^-3 + t^-1``."""
    if p.is_zero():
        return "0"
    halves = isinstance(p, HalfLaurent)
    parts: list[str] = []
    for e, c in p.terms:
        exp_txt = _format_exponent_halves(e) if halves else str(e)
        if (halves and e == 0) or (not halves and e == 0):
            body = format_rational(abs(c))
        else:
            mag = abs(c)
            coeff_txt = "" if mag == 1 else format_rational(mag) + "*"
            body = f"{coeff_txt}{variable}^{exp_txt}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Truncated power series in u = t - 1
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncSeries:
    """Truncated Taylor series with exact rational coefficients.

    ``coeffs[k]`` multiplies u^k; the tuple always has length ``order + 1``
    and arithmetic never reads beyond the truncation order.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike], order: int) -> "TruncSeries":
        cs = [_fr(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "TruncSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls.constant(1, order)

    def coeff(self, k: int) -> Fraction:
        if k > self.order:
            raise TruncationError(k, self.order)
        return self.coeffs[k]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_order(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"mismatched truncation orders {self.order} != {other.order}"
            )

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        return TruncSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncSeries(n, tuple(out))

    def scale(self, k: RationalLike) -> "TruncSeries":
        k = _fr(k)
        return TruncSeries(self.order, tuple(c * k for c in self.coeffs))

    def invert(self) -> "TruncSeries":
        """Multiplicative inverse up to the truncation order.

        Raises ``SingularSeriesError`` when the constant term vanishes.
        """
        a0 = self.coeffs[0]
        if a0 == 0:
            raise SingularSeriesError("cannot invert a series with zero constant term")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = Fraction(1) / a0
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * inv[k - j]
            inv[k] = -acc / a0
        return TruncSeries(n, tuple(inv))

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            return (self ** (-n)).invert()
        result = TruncSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def half_power(halves: int, order: int) -> TruncSeries:
    """Binomial expansion of (1 + u)^(halves/2) to the given order."""
    k = Fraction(halves, 2)
    coeffs = [Fraction(1)]
    binom = Fraction(1)
    for n in range(1, order + 1):
        binom = binom * (k - (n - 1)) / n
        coeffs.append(binom)
    return TruncSeries.from_coeffs(coeffs, order)


def laurent_to_series(p: HalfLaurent, order: int) -> TruncSeries:
    """Expand a half-exponent Laurent polynomial about t = 1 (u = t - 1)."""
    out = TruncSeries.zero(order)
    for halves, c in p.terms:
        out = out + half_power(halves, order).scale(c)
    return out


def derivative_at_one(s: TruncSeries, i: int) -> Fraction:
    """The i-th t-derivative at t = 1, i.e. i! times the u^i coefficient."""
    if i < 0:
        raise ValueError("derivative order must be non-negative")
    if i > s.order:
        raise TruncationError(i, s.order)
    return math.factorial(i) * s.coeffs[i]


def compose_exp_minus_one(s: TruncSeries) -> TruncSeries:
    """Reparametrise a series in u = t - 1 by u = e^h - 1.

    The result is a series in h of the same truncation order; its h^i
    coefficient times i! is the i-th h-derivative at h = 0.
    """
    n = s.order
    e_minus_one = TruncSeries.from_coeffs(
        [0] + [Fraction(1, math.factorial(k)) for k in range(1, n + 1)], n
    )
    out = TruncSeries.constant(s.coeffs[0], n)
    power = TruncSeries.one(n)
    for k in range(1, n + 1):
        power = power * e_minus_one
        out = out + power.scale(s.coeffs[k])
    return out
