"""Exact arithmetic in Q and Q(i).

Everything downstream (polynomials, Groebner bases, the Diophantine solver)
works over the field Q(i) of Gaussian rationals.  A Gaussian rational is kept
componentwise as ``re + im*i`` with both components exact rationals; this makes
conjugation and the norm constant-time, which is all we ever need from the
extension.

Rationals are ``gmpy2.mpq`` values: arbitrary-precision, always reduced, with a
positive denominator.  Groebner coefficient growth makes anything narrower than
arbitrary precision unusable.
"""

from __future__ import annotations

from gmpy2 import mpq, mpz

__all__ = [
    "Rational",
    "rational",
    "GaussianRational",
    "gq",
    "gq_arith",
    "gq_normalize",
    "GQ_ZERO",
    "GQ_ONE",
    "GQ_I",
    "rat_gcd",
    "format_rational",
]

Rational = mpq


class ExactArithmeticError(ArithmeticError):
    """Base class for arithmetic failures in the exact layer."""


class DivisionByZero(ExactArithmeticError, ZeroDivisionError):
    """Division by an exact zero."""


class MalformedRational(ExactArithmeticError):
    """A raw fraction with zero denominator."""


def rational(num, den=1) -> mpq:
    """Build an exact rational, rejecting zero denominators explicitly."""
    if den == 0:
        raise MalformedRational("zero denominator")
    return mpq(num, den)


def rat_gcd(a: mpq, b: mpq) -> mpq:
    """gcd on rationals: gcd of numerators over lcm of denominators.

    Used for content extraction so that scaled polynomials keep integral,
    coprime coefficients.  gcd(0, 0) = 0.
    """
    an, ad = a.numerator, a.denominator
    bn, bd = b.numerator, b.denominator
    from math import gcd, lcm

    n = gcd(int(an), int(bn))
    d = lcm(int(ad), int(bd))
    return mpq(n, d)


class GaussianRational:
    """An element of Q(i), stored as an exact (re, im) pair."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def is_rational(self) -> bool:
        return not self.im

    # -- ring/field operations -------------------------------------------

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        if other.is_zero():
            raise DivisionByZero("division by zero in Q(i)")
        c, d = other.re, other.im
        n = c * c + d * d
        a, b = self.re, self.im
        return GaussianRational((a * c + b * d) / n, (b * c - a * d) / n)

    def inverse(self) -> "GaussianRational":
        return GQ_ONE / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> mpq:
        """x * conj(x) as a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def scale(self, r) -> "GaussianRational":
        r = mpq(r)
        return GaussianRational(self.re * r, self.im * r)

    # -- comparisons / hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, mpq, mpz)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- text form ---------------------------------------------------------
    # Canonical emission: "p/q" for rationals, "r/s*i" for purely imaginary
    # values, "p/q + r/s*i" (or "- r/s*i") otherwise.

    def __str__(self) -> str:
        if not self.im:
            return format_rational(self.re)
        im_abs = format_rational(abs(self.im))
        im_part = "i" if im_abs == "1" else f"{im_abs}*i"
        if not self.re:
            return im_part if self.im > 0 else f"-{im_part}"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)} {sign} {im_part}"

    def __repr__(self) -> str:
        return f"gq({self})"


def format_rational(r: mpq) -> str:
    return str(r)


GQ_ZERO = GaussianRational(0)
GQ_ONE = GaussianRational(1)
GQ_I = GaussianRational(0, 1)


def gq(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, mpq, Fractions, or "p/q" strings."""
    if isinstance(re, GaussianRational):
        if im:
            raise TypeError("cannot add an imaginary part to a GaussianRational")
        return re
    return GaussianRational(mpq(re), mpq(im))


def gq_arith(x: GaussianRational, y: GaussianRational, op: str) -> GaussianRational:
    """Field operation dispatcher: op in {add, sub, mul, div}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def gq_normalize(re_num, re_den, im_num, im_den) -> GaussianRational:
    """Canonicalize a raw pair of unreduced fractions into Q(i).

    Zero denominators are malformed input, not a value.
    """
    if re_den == 0 or im_den == 0:
        raise MalformedRational("zero denominator in raw Gaussian rational")
    return GaussianRational(mpq(re_num, re_den), mpq(im_num, im_den))
