"""Exact dyadic rationals ``m / 2**k``."""
from __future__ import annotations

import re
from functools import total_ordering

from .errors import DomainError


def _two_adic(m: int) -> int:
    """Exponent of the largest power of two dividing nonzero ``m``."""
    return (m & -m).bit_length() - 1


@total_ordering
class Dyadic:
    """The rational ``numerator / 2**exponent`` kept in normal form.

    Nonzero values always carry an odd numerator; zero is ``(0, 0)``.  The
    exponent may be negative, e.g. ``2`` is stored as ``1 / 2**-1``.
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        numerator = int(numerator)
        exponent = int(exponent)
        if numerator == 0:
            exponent = 0
        else:
            shift = _two_adic(numerator)
            numerator >>= shift
            exponent -= shift
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def from_int(cls, value: int) -> "Dyadic":
        return cls(value, 0)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def _scaled(self, exponent: int) -> int:
        # numerator over 2**exponent, exponent >= self.exponent
        return self.numerator << (exponent - self.exponent)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        k = max(self.exponent, other.exponent)
        return Dyadic(self._scaled(k) + other._scaled(k), k)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dyadic(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __abs__(self):
        return Dyadic(abs(self.numerator), self.exponent)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        k = max(self.exponent, other.exponent)
        return self._scaled(k) < other._scaled(k)

    def __hash__(self):
        return hash((self.numerator, self.exponent))

    def __bool__(self):
        return self.numerator != 0

    def __repr__(self):
        return f"Dyadic({self.numerator}, {self.exponent})"

    def __str__(self):
        if self.exponent <= 0:
            return str(self.numerator << -self.exponent)
        return f"{self.numerator}/{1 << self.exponent}"

    def as_fraction(self):
        from fractions import Fraction
        if self.exponent <= 0:
            return Fraction(self.numerator << -self.exponent)
        return Fraction(self.numerator, 1 << self.exponent)


def _coerce(x):
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, int):
        return Dyadic(x, 0)
    return NotImplemented


ZERO = Dyadic(0, 0)
ONE = Dyadic(1, 0)


def dyadic_add(a: Dyadic, b: Dyadic) -> Dyadic:
    return a + b


def dyadic_mul(a: Dyadic, b: Dyadic) -> Dyadic:
    return a * b


def granularity_of(a: Dyadic):
    """Exponent ``k`` of ``a = m / 2**k`` with ``m`` odd, or ``None`` for zero."""
    if a.numerator == 0:
        return None
    return a.exponent


_PATTERN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_dyadic(text: str) -> Dyadic:
    """Inverse of ``str``: accepts ``"m"`` or ``"m/D"`` with ``D`` a power of two."""
    match = _PATTERN.match(text)
    if not match:
        raise DomainError(f"not a dyadic rational: {text!r}")
    num = int(match.group(1))
    if match.group(2) is None:
        return Dyadic(num, 0)
    den = int(match.group(2))
    if den <= 0 or den & (den - 1):
        raise DomainError(f"denominator {den} is not a power of two")
    return Dyadic(num, den.bit_length() - 1)
