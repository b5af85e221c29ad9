"""Base-b digits and repdigit recognition."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, log2
from typing import Optional


@dataclass(frozen=True)
class RepdigitForm:
    """``a * (b**m - 1) / (b - 1)``.

    With ``generalized=True`` the multiplier may run up to ``(b - 1)**2``;
    this is the shape that survives the gcd reduction of two odd solutions.
    """

    b: int
    a: int
    m: int
    generalized: bool = False

    def __post_init__(self) -> None:
        if self.b < 2:
            raise ValueError("base must be >= 2")
        if self.m < 1:
            raise ValueError("digit count must be >= 1")
        top = (self.b - 1) ** 2 if self.generalized else self.b - 1
        if not 1 <= self.a <= top:
            raise ValueError(f"digit a={self.a} outside 1..{top} for base {self.b}")

    @property
    def value(self) -> int:
        return repdigit_value(self)


def repunit(b: int, m: int) -> int:
    return (b**m - 1) // (b - 1)


def repdigit_value(form: RepdigitForm) -> int:
    return form.a * repunit(form.b, form.m)


def digits(N: int, b: int) -> list[int]:
    """Base-b digits of ``N``, most significant first."""
    if N < 1:
        raise ValueError("N must be positive")
    if b < 2:
        raise ValueError("base must be >= 2")
    out = []
    while N:
        N, r = divmod(N, b)
        out.append(r)
    return out[::-1]


def _log_exact(t: int, b: int) -> Optional[int]:
    # m with b**m == t, else None
    if t < 1:
        return None
    guess = max(0, round((t.bit_length() - 1) / log2(b)))
    p = b**guess
    while p > t:
        guess -= 1
        p //= b
    while p < t:
        guess += 1
        p *= b
    return guess if p == t else None


def as_repdigit(N: int, b: int) -> Optional[RepdigitForm]:
    """Return the repdigit form of ``N`` in base ``b``, or ``None``."""
    if N < 1:
        raise ValueError("N must be positive")
    if b < 2:
        raise ValueError("base must be >= 2")
    a = N % b
    if a == 0:
        return None
    q, r = divmod(N * (b - 1), a)
    if r:
        return None
    m = _log_exact(q + 1, b)
    if m is None or m < 1:
        return None
    return RepdigitForm(b, a, m)


def gcd_power_minus_one(b: int, m1: int, m2: int) -> int:
    if b < 2 or m1 < 1 or m2 < 1:
        raise ValueError("need b >= 2 and m1, m2 >= 1")
    g = gcd(b**m1 - 1, b**m2 - 1)
    if g != b ** gcd(m1, m2) - 1:
        raise AssertionError(f"gcd(b^m1-1, b^m2-1) != b^gcd-1 at b={b}, m1={m1}, m2={m2}")
    return g
