"""Exact arithmetic in Q(sqrt(D)) and the quadratic numbers beta, gamma, alpha."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .pell_core import is_square


@dataclass(frozen=True)
class QuadElement:
    """``u + v*sqrt(D)`` with rational coordinates and a fixed integer ``D``.

    ``D`` may be negative (imaginary quadratic) or a square; in the latter
    case the element is rational and :meth:`rational_value` collapses it.
    """

    u: Fraction
    v: Fraction
    D: int

    @classmethod
    def of(cls, u, v, D: int) -> QuadElement:
        return cls(Fraction(u), Fraction(v), D)

    def _coerce(self, other) -> QuadElement:
        if isinstance(other, QuadElement):
            if other.D != self.D:
                raise ValueError(f"mixed fields: sqrt({self.D}) vs sqrt({other.D})")
            return other
        return QuadElement(Fraction(other), Fraction(0), self.D)

    def __add__(self, other) -> QuadElement:
        o = self._coerce(other)
        return QuadElement(self.u + o.u, self.v + o.v, self.D)

    __radd__ = __add__

    def __neg__(self) -> QuadElement:
        return QuadElement(-self.u, -self.v, self.D)

    def __sub__(self, other) -> QuadElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> QuadElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> QuadElement:
        o = self._coerce(other)
        return QuadElement(
            self.u * o.u + self.D * self.v * o.v, self.u * o.v + self.v * o.u, self.D
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadElement:
        return QuadElement(self.u, -self.v, self.D)

    def norm(self) -> Fraction:
        return self.u * self.u - self.D * self.v * self.v

    def inverse(self) -> QuadElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("element has zero norm")
        c = self.conjugate()
        return QuadElement(c.u / n, c.v / n, self.D)

    def __truediv__(self, other) -> QuadElement:
        return self * self._coerce(other).inverse()

    def __pow__(self, k: int) -> QuadElement:
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadElement(Fraction(1), Fraction(0), self.D)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadElement):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = self._coerce(other)
        if other.D != self.D:
            return False
        if self.u == other.u and self.v == other.v:
            return True
        return self.is_rational() and other.is_rational() and (
            self.rational_value() == other.rational_value()
        )

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.u, self.v, self.D))

    def is_rational(self) -> bool:
        return self.v == 0 or is_square(self.D)

    def rational_value(self) -> Fraction:
        if self.v == 0:
            return self.u
        if not is_square(self.D):
            raise ValueError("element is irrational")
        return self.u + self.v * isqrt(self.D)


def numerator_divisible(q: Fraction, modulus: int) -> bool:
    """``modulus`` divides the numerator of ``q`` in lowest terms (0 counts)."""
    return q.numerator % modulus == 0


@dataclass(frozen=True)
class QuadraticAlgebraic:
    """Root of ``A X^2 + B X + C`` picked by ``sign`` in ``(-B + sign*sqrt(disc)) / 2A``.

    ``A == 0`` encodes a rational number as the root of ``B X + C``.
    """

    A: int
    B: int
    C: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.A < 0 or (self.A == 0 and self.B == 0):
            raise ValueError("need A > 0, or A == 0 with B != 0 for a rational")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def element(self) -> QuadElement:
        if self.A == 0:
            return QuadElement.of(Fraction(-self.C, self.B), 0, 1)
        disc = self.discriminant
        return QuadElement.of(Fraction(-self.B, 2 * self.A), Fraction(self.sign, 2 * self.A), disc)

    def evaluate_at(self, z: QuadElement) -> QuadElement:
        return self.A * z * z + self.B * z + self.C


def _reduced_linear_or_quadratic(A: int, B: int, C: int, sign: int) -> QuadraticAlgebraic:
    g = gcd(gcd(A, B), C)
    A, B, C = A // g, B // g, C // g
    disc = B * B - 4 * A * C
    if is_square(disc):
        # rational root: write it as the root of a primitive linear form
        num = -B + sign * isqrt(disc)
        den = 2 * A
        q = Fraction(num, den)
        return QuadraticAlgebraic(0, q.denominator, -q.numerator)
    return QuadraticAlgebraic(A, B, C, sign)


def beta_number(a: int, b: int) -> QuadraticAlgebraic:
    """``-a/(b-1) + sqrt((a/(b-1))^2 - 1)``; its minimal polynomial is
    ``(b-1) X^2 + 2a X + (b-1)`` up to content."""
    return _reduced_linear_or_quadratic(b - 1, 2 * a, b - 1, 1)


def beta_element(a: int, b: int) -> QuadElement:
    """Same number as :func:`beta_number`, as ``u + v sqrt(a^2 - (b-1)^2)``."""
    return QuadElement.of(Fraction(-a, b - 1), Fraction(1, b - 1), a * a - (b - 1) ** 2)


def alpha_number(X1: int) -> QuadraticAlgebraic:
    """``X1 + sqrt(X1^2 - 1)``, a root of ``X^2 - 2 X1 X + 1``."""
    return QuadraticAlgebraic(1, -2 * X1, 1, 1)
