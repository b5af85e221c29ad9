"""Explicit bound evaluators: p-adic (Yu), complex (Matveev), elliptic (Baker),
Weil heights, and the chain ending in the bound on d.

Real-valued results use double precision and are nudged one ulp in the
weak direction (upper bounds up, lower bounds down). Anything too large for
a float is kept as an exact integer or compared in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from decimal import Context, Decimal
from fractions import Fraction
from typing import Sequence

# log_d_bound is stored as ceil(value * LOG_SCALE)
LOG_SCALE_DIGITS = 30
LOG_SCALE = 10**LOG_SCALE_DIGITS

THEOREM_EXPONENT_POWER = 10**5


def _up(x: float) -> float:
    return math.nextafter(x, math.inf)


def _down(x: float) -> float:
    return math.nextafter(x, -math.inf)


@dataclass(frozen=True)
class YuParams:
    t: int
    D: int
    p: int
    e_pi: int
    f_pi: int
    H: Sequence[float]
    B: int

    def __post_init__(self) -> None:
        if self.t < 1 or self.D < 1:
            raise ValueError("need t >= 1 and D >= 1")
        if self.p < 2:
            raise ValueError("p must be a prime")
        if not 1 <= self.e_pi <= self.D or not 1 <= self.f_pi <= self.D:
            raise ValueError("ramification index and residue degree must lie in 1..D")
        if self.B < 2:
            raise ValueError("B must be >= 2")
        if len(self.H) != self.t:
            raise ValueError("need one height parameter per term")
        logp = math.log(self.p)
        if any(h < logp for h in self.H):
            raise ValueError("each H_i must be >= log p")


@dataclass(frozen=True)
class MatveevParams:
    t: int
    D: int
    B: int
    H: Sequence[float]

    def __post_init__(self) -> None:
        if self.t < 1 or self.D < 1 or self.B < 1:
            raise ValueError("need t, D, B >= 1")
        if len(self.H) != self.t:
            raise ValueError("need one height parameter per term")
        if any(h < 0.16 for h in self.H):
            raise ValueError("each H_i must be >= 0.16")


def log_yu_bound(params: YuParams) -> float:
    t, D = params.t, params.D
    logp = math.log(params.p)
    terms = [
        math.log(19),
        2 * (t + 1) * math.log(20 * math.sqrt(t + 1) * D),
        (t - 1) * math.log(params.e_pi),
        params.f_pi * logp,
        -2 * math.log(params.f_pi * logp),
        math.log(math.log(math.e**5 * t * D)),
        sum(math.log(h) for h in params.H),
        math.log(math.log(params.B)),
    ]
    return math.fsum(terms)


def yu_bound(params: YuParams) -> float:
    """Upper bound for the pi-adic valuation of ``delta_1^b_1 ... delta_t^b_t - 1``."""
    return _up(math.exp(log_yu_bound(params)))


def matveev_lower(params: MatveevParams) -> float:
    """Lower bound for ``log |Lambda|`` (a negative number)."""
    t, D = params.t, params.D
    mag = (
        1.4
        * 30 ** (t + 3)
        * t**4.5
        * D**2
        * (1 + math.log(D))
        * (1 + math.log(params.B))
        * math.prod(params.H)
    )
    return _down(-mag)


def baker_log_bound(A0: int) -> float:
    """``10^4 log(10^10 |A0|)``: the log of the exponent in Baker's bound
    ``max(|X|, |Y|) < exp((10^10 |A0|)^(10^4))``."""
    if A0 == 0:
        raise ValueError("A0 must be nonzero")
    return _up(10**4 * (10 * math.log(10) + math.log(abs(A0))))


def baker_chain_holds(A0: int, b: int) -> bool:
    """``(10^10 |A0|)^(10^4) < 0.5 (10b)^(10^5)``, compared in log space."""
    return baker_log_bound(A0) < math.log(0.5) + THEOREM_EXPONENT_POWER * math.log(10 * b)


def height_quadratic(A: int, B: int, C: int) -> float:
    """Absolute logarithmic Weil height of a root of ``A X^2 + B X + C``.

    ``A = 0`` is the rational root of ``B X + C``. For irreducible quadratics
    this is ``(log A + sum log max(1, |root|)) / 2``.
    """
    if A == 0:
        if B == 0:
            raise ValueError("zero polynomial")
        q = Fraction(-C, B)
        return math.log(max(abs(q.numerator), q.denominator))
    if A < 0:
        A, B, C = -A, -B, -C
    disc = B * B - 4 * A * C
    if disc < 0:
        # conjugate pair with |root|^2 = C/A
        r = math.sqrt(C / A)
        moduli = [r, r]
    elif C == 0:
        moduli = [0.0, abs(B / A)]
    else:
        s = math.sqrt(disc)
        r1 = (-B - math.copysign(s, B)) / (2 * A)
        moduli = [abs(r1), abs(C / (A * r1))]
    return (math.log(A) + sum(math.log(max(1.0, z)) for z in moduli)) / 2


def m_bound(b: int, n: float) -> float:
    """``m < 2 10^17 b^6 log n``."""
    if b < 2 or n < 3:
        raise ValueError("need b >= 2, n >= 3")
    return _up(2e17 * b**6 * math.log(n))


def invert_n_log_n(T: float) -> float:
    """If ``n / log n < T`` and ``T > 3`` then ``n < 2 T log T``."""
    if T <= 3:
        raise ValueError("T must exceed 3")
    return _up(2 * T * math.log(T))


# ---------------------------------------------------------------------------
# specializations and constants re-derived from the general statements
# ---------------------------------------------------------------------------

def yu_specialized(b: int, n: int, p: int, e_pi: int, f_pi: int) -> float:
    """Yu's bound for two quadratic numbers in a field of degree 4 with
    ``H = 4 log b`` and ``B = n``."""
    H = 4 * math.log(b)
    return yu_bound(YuParams(2, 4, p, e_pi, f_pi, (H, H), n))


def yu_folded_coefficient() -> float:
    """The constant in front of ``b^4 (log b)^2 log n`` after taking the worst
    admissible ``e = 4``, ``p^f <= b^4``, ``f log p >= log 2`` and ``H = 4 log b``."""
    return _up(
        19 * (20 * math.sqrt(3) * 4) ** 6 * 4 / math.log(2) ** 2 * math.log(8 * math.e**5) * 16
    )


def m_bound_folded(b: int, n: float) -> float:
    """``1.3 10^17 b^4 (log b)^2 log n + 16 log n``."""
    return 1.3e17 * b**4 * math.log(b) ** 2 * math.log(n) + 16 * math.log(n)


def matveev_n_coefficient() -> float:
    """``1.4 30^6 3^4.5 2^2 (1 + log 2) 8``: with ``t=3, D=2`` and heights
    ``(4 log b, 2 log b, log alpha)`` one gets
    ``n - 2 <= coeff * (1 + log 2mn) (log b)^2``."""
    return _up(1.4 * 30**6 * 3**4.5 * 2**2 * (1 + math.log(2)) * 8)


def n_bound_implicit(b: int, n: float) -> float:
    """``10^13 (1 + log(4 10^17 b^6 n log n)) (log b)^2``."""
    return 1e13 * (1 + math.log(4e17 * b**6 * n * math.log(n))) * math.log(b) ** 2


def n_bound_derived(b: int) -> float:
    """``2 T log T`` with ``T = 6 10^15 (log b)^3``, before rounding to ``2 10^18 (log b)^4``."""
    return invert_n_log_n(6e15 * math.log(b) ** 3)


# ---------------------------------------------------------------------------
# bound report
# ---------------------------------------------------------------------------

def _ln_upper(b: int, digits: int = 120) -> Fraction:
    # ln b rounded half-even at `digits` significant digits, plus one unit
    ctx = Context(prec=digits)
    ln = Decimal(b).ln(ctx)
    ulp = Decimal(1).scaleb(ln.adjusted() - digits + 1)
    return Fraction(ln) + Fraction(ulp)


def scaled_log_upper(coefficient: int, b: int) -> int:
    """``ceil(coefficient * ln(b) * LOG_SCALE)`` computed from an upper bound on ``ln b``."""
    q = coefficient * _ln_upper(b) * LOG_SCALE
    return -((-q.numerator) // q.denominator)


@dataclass(frozen=True)
class PowerForm:
    """``mantissa * base**exponent`` with exact integer fields."""

    mantissa: int
    base: int
    exponent: int

    def __str__(self) -> str:
        core = f"{self.base}^{self.exponent}"
        return core if self.mantissa == 1 else f"{self.mantissa}*{core}"

    def value(self) -> int:
        return self.mantissa * self.base**self.exponent


def compact_power(base: int, exponent: int) -> PowerForm:
    """Rewrite ``base**exponent`` over the smallest root of ``base``."""
    for k in range(max(1, base.bit_length()), 1, -1):
        root = round(base ** (1 / k))
        for cand in (root - 1, root, root + 1):
            if cand >= 2 and cand**k == base:
                return PowerForm(1, cand, exponent * k)
    return PowerForm(1, base, exponent)


@dataclass
class BoundReport:
    b: int
    n_max: int
    ell_max: int
    m_max: int
    log_d_bound: int  # ceil(2 m_max ln b * LOG_SCALE)
    n_derived: float = field(default=0.0)
    m_derived: float = field(default=0.0)

    @cached_property
    def theorem_exponent(self) -> int:
        """``(10b)^(10^5)``; d <= exp(theorem_exponent)."""
        return (10 * self.b) ** THEOREM_EXPONENT_POWER

    @property
    def d_exponent_base_b(self) -> int:
        """``d < b ** d_exponent_base_b``."""
        return 2 * self.m_max

    def to_record(self) -> dict:
        te = compact_power(10 * self.b, THEOREM_EXPONENT_POWER)
        return {
            "kind": "bound",
            "b": self.b,
            "n_max": self.n_max,
            "ell_max": self.ell_max,
            "m_max": self.m_max,
            "n_derived": self.n_derived,
            "m_derived": self.m_derived,
            "d_exponent_base_b": self.d_exponent_base_b,
            "log_d_bound": {"scaled": self.log_d_bound, "scale_digits": LOG_SCALE_DIGITS},
            "theorem_exponent": {
                "mantissa": te.mantissa,
                "base": te.base,
                "exponent": te.exponent,
                "text": str(te),
            },
        }


def bound_report(b: int) -> BoundReport:
    if b < 2:
        raise ValueError("base must be >= 2")
    n_max = 10**18 * b**4
    # ell < 2n + 1 with integer n < n_max gives ell <= 2(n_max - 1) < 2 n_max
    ell_max = 2 * n_max
    m_max = 10**20 * b**7
    # the derivation's own value, before it is weakened to 10^18 b^4
    n_der = _up(2e18 * math.log(b) ** 4)
    return BoundReport(
        b=b,
        n_max=n_max,
        ell_max=ell_max,
        m_max=m_max,
        log_d_bound=scaled_log_upper(2 * m_max, b),
        n_derived=n_der,
        m_derived=m_bound(b, n_der),
    )

