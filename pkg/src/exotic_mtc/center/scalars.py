"""Scalars a + b*rho with a, b cyclotomic and rho^2 = r a fixed cyclotomic number.

Two of the half-braidings carry the coefficient (sqrt(3)/2)^(1/2) = 3^(1/4)/sqrt(2),
which lies outside every cyclotomic field (Q(3^(1/4)) is not abelian).  Adjoining
rho with rho^2 = sqrt(3)/2 gives a quadratic extension of Q(zeta_24) in which
every datum of the category and its center lives.  Values whose rho-part
vanishes collapse back to plain CycloNumber, so most arithmetic stays on the
fast path.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

import mpmath

from ..cyclo import CycloNumber

Scalar = Union[int, Fraction, CycloNumber, "RadicalNumber"]


def _zero(x: object) -> bool:
    if isinstance(x, CycloNumber):
        return x.is_zero()
    return x == 0


class RadicalNumber:
    """a + b*sqrt(r) with the branch of sqrt(r) fixed by ``rho_approx``."""

    __slots__ = ("a", "b", "r")

    def __init__(self, a: Scalar, b: Scalar, r: CycloNumber):
        self.a = a
        self.b = b
        self.r = r

    @staticmethod
    def make(a: Scalar, b: Scalar, r: CycloNumber) -> Scalar:
        if _zero(b):
            return a
        return RadicalNumber(a, b, r)

    def _parts(self, other: Scalar) -> tuple[Scalar, Scalar] | None:
        if isinstance(other, RadicalNumber):
            if other.r is not self.r and other.r != self.r:
                raise ValueError("mixing different radicals")
            return other.a, other.b
        if isinstance(other, (int, Fraction, CycloNumber)) and not isinstance(other, bool):
            return other, 0
        return None

    def __add__(self, other: Scalar) -> Scalar:
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return RadicalNumber.make(self.a + p[0], self.b + p[1], self.r)

    __radd__ = __add__

    def __neg__(self) -> RadicalNumber:
        return RadicalNumber(-self.a, -self.b, self.r)

    def __sub__(self, other: Scalar) -> Scalar:
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return RadicalNumber.make(self.a - p[0], self.b - p[1], self.r)

    def __rsub__(self, other: Scalar) -> Scalar:
        return (-self) + other

    def __mul__(self, other: Scalar) -> Scalar:
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        if _zero(d):
            if _zero(c):
                return 0
            return RadicalNumber(self.a * c, self.b * c, self.r)
        a, b = self.a, self.b
        return RadicalNumber.make(a * c + b * d * self.r, a * d + b * c, self.r)

    __rmul__ = __mul__

    def conj_radical(self) -> RadicalNumber:
        return RadicalNumber(self.a, -self.b, self.r)

    def inverse(self) -> Scalar:
        norm = self.a * self.a - self.b * self.b * self.r
        inv = Fraction(1, norm) if isinstance(norm, int) else 1 / norm
        return RadicalNumber.make(self.a * inv, -self.b * inv, self.r)

    def __truediv__(self, other: Scalar) -> Scalar:
        if isinstance(other, RadicalNumber):
            return self * other.inverse()
        return self * (Fraction(1, other) if isinstance(other, int) else 1 / other)

    def __rtruediv__(self, other: Scalar) -> Scalar:
        return self.inverse() * other

    def __pow__(self, e: int) -> Scalar:
        if e < 0:
            return self.inverse() ** (-e)
        out: Scalar = 1
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        # b != 0 always holds for stored values and rho is not in the base field
        return _zero(self.a) and _zero(self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalNumber):
            return self.a == other.a and self.b == other.b and self.r == other.r
        if isinstance(other, (int, Fraction, CycloNumber)):
            return _zero(self.b) and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def approx(self, digits: int = 15) -> mpmath.mpc:
        with mpmath.workdps(digits + 10):
            rho = mpmath.sqrt(_approx(self.r, digits))
            return +(_approx(self.a, digits) + _approx(self.b, digits) * rho)

    def __complex__(self) -> complex:
        return complex(self.approx())

    def __repr__(self) -> str:
        return f"RadicalNumber({self.a!r}, {self.b!r})"


def _approx(x: Scalar, digits: int = 15) -> mpmath.mpc:
    if isinstance(x, (CycloNumber, RadicalNumber)):
        return x.approx(digits)
    return mpmath.mpc(mpmath.mpf(Fraction(x).numerator) / Fraction(x).denominator)


def is_zero(x: Scalar) -> bool:
    if isinstance(x, (CycloNumber, RadicalNumber)):
        return x.is_zero()
    return x == 0


def to_complex(x: Scalar) -> complex:
    return complex(_approx(x))
