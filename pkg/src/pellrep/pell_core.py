"""Exact Pell-equation arithmetic.

Everything here works on Python integers and :class:`fractions.Fraction`;
no floating point is used to generate solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator

RationalValue = Fraction


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


@dataclass(frozen=True)
class PellPair:
    d: int
    n: int
    X: int
    Y: int

    def __post_init__(self) -> None:
        if self.X * self.X - self.d * self.Y * self.Y != 1:
            raise ValueError(f"({self.X}, {self.Y}) does not solve X^2 - {self.d}Y^2 = 1")
        if self.X < 2 or self.Y < 1:
            raise ValueError("Pell pair must have X >= 2 and Y >= 1")


@dataclass(frozen=True)
class PellOrbit:
    """The solutions generated by ``(X1, Y1)``.

    ``(X1, Y1)`` is normally the fundamental solution, but any positive
    solution may seed an orbit (e.g. ``(X, 1)`` with ``d = X**2 - 1``).
    """

    d: int
    X1: int
    Y1: int

    def __post_init__(self) -> None:
        if self.d < 2 or is_square(self.d):
            raise ValueError(f"d={self.d} must be a nonsquare integer >= 2")
        if self.X1 * self.X1 - self.d * self.Y1 * self.Y1 != 1 or self.Y1 < 1:
            raise ValueError(f"({self.X1}, {self.Y1}) is not a positive solution for d={self.d}")

    @classmethod
    def from_x(cls, X: int) -> PellOrbit:
        """Orbit seeded at ``(X, 1)`` for ``d = X**2 - 1``."""
        if X < 2:
            raise ValueError("X must be >= 2")
        return cls(X * X - 1, X, 1)

    def __iter__(self) -> Iterator[PellPair]:
        return iter_solutions(self)


def fundamental_solution(d: int) -> PellOrbit:
    """Minimal positive solution of ``X^2 - d Y^2 = 1``.

    Runs the integer PQa continued-fraction iteration for sqrt(d). The state
    ``(P, Q)`` returns to ``(a0, 1)`` at the end of each period; the first
    convergent at a period end that solves the +1 equation is the answer
    (end of period one when the period is even, period two otherwise).
    """
    if d < 2 or is_square(d):
        raise ValueError(f"d={d} must be a nonsquare integer >= 2")
    a0 = isqrt(d)
    P, Q, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while True:
        P = a * Q - P
        Q = (d - P * P) // Q
        if Q == 1 and h * h - d * k * k == 1:
            return PellOrbit(d, h, k)
        a = (a0 + P) // Q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev


def iter_solutions(orbit: PellOrbit) -> Iterator[PellPair]:
    """Yield ``(X_n, Y_n)`` for n = 1, 2, ... using the linear recurrences."""
    two_x1 = 2 * orbit.X1
    x_prev, x = 1, orbit.X1
    y_prev, y = 0, orbit.Y1
    n = 1
    while True:
        yield PellPair(orbit.d, n, x, y)
        x_prev, x = x, two_x1 * x - x_prev
        y_prev, y = y, two_x1 * y - y_prev
        n += 1


def nth_solution(orbit: PellOrbit, n: int) -> PellPair:
    if n < 1:
        raise ValueError("n must be >= 1")
    two_x1 = 2 * orbit.X1
    x_prev, x = 1, orbit.X1
    y_prev, y = 0, orbit.Y1
    for _ in range(n - 1):
        x_prev, x = x, two_x1 * x - x_prev
        y_prev, y = y, two_x1 * y - y_prev
    return PellPair(orbit.d, n, x, y)


def _chebyshev_pair(n: int, x):
    # returns (P_n(x), P_n'(x)); works over any ring supporting + and *
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return x * 0 + 1, x * 0
    p_prev, p = x * 0 + 1, x
    dp_prev, dp = x * 0, x * 0 + 1
    for _ in range(n - 1):
        p_prev, p, dp_prev, dp = p, 2 * x * p - p_prev, dp, 2 * p + 2 * x * dp - dp_prev
    return p, dp


def chebyshev_P(n: int, x: Fraction | int) -> Fraction:
    """Exact ``P_n(x)`` with ``P_0 = 1, P_1 = x, P_{k+1} = 2x P_k - P_{k-1}``."""
    return _chebyshev_pair(n, Fraction(x))[0]


def chebyshev_P_prime(n: int, x: Fraction | int) -> Fraction:
    """Exact derivative ``P_n'(x)`` from the differentiated recurrence."""
    return _chebyshev_pair(n, Fraction(x))[1]


def chebyshev_pair_mod(n: int, x: int, modulus: int) -> tuple[int, int]:
    """``(P_n(x), P_n'(x))`` reduced modulo ``modulus``."""
    x %= modulus
    if n == 0:
        return 1 % modulus, 0
    p_prev, p = 1, x
    dp_prev, dp = 0, 1
    for _ in range(n - 1):
        p_prev, p, dp_prev, dp = (
            p,
            (2 * x * p - p_prev) % modulus,
            dp,
            (2 * p + 2 * x * dp - dp_prev) % modulus,
        )
    return p % modulus, dp % modulus


def chebyshev_coefficients(n: int) -> list[int]:
    """Integer coefficients of ``P_n``, lowest degree first."""
    if n == 0:
        return [1]
    prev, cur = [1], [0, 1]
    for _ in range(n - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def nu_p(k: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``k``."""
    if k == 0:
        raise ValueError("nu_p(0) is undefined")
    if p < 2:
        raise ValueError("p must be a prime")
    k = abs(k)
    e = 0
    while k % p == 0:
        k //= p
        e += 1
    return e
