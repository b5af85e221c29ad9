"""Executable checks for the structural steps behind the repdigit finiteness argument.

Every check works in exact arithmetic. Checks that produce a report return a
:class:`Check`; operations that produce a value raise :class:`Falsified` when
an identity that is supposed to be a theorem fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Any, Optional

from .pell_core import (
    PellOrbit,
    chebyshev_P,
    chebyshev_P_prime,
    chebyshev_pair_mod,
    fundamental_solution,
    is_square,
    iter_solutions,
    nth_solution,
)
from .quadratic import beta_element, numerator_divisible
from .repdigit import RepdigitForm, as_repdigit, repdigit_value, repunit


class Falsified(AssertionError):
    """An identity that should always hold did not; ``evidence`` says where."""

    def __init__(self, claim: str, evidence: dict[str, Any]):
        super().__init__(f"{claim}: {evidence}")
        self.claim = claim
        self.evidence = evidence


@dataclass
class Check:
    name: str
    claim: str
    ok: bool
    params: dict[str, Any]
    evidence: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_record(self) -> dict[str, Any]:
        return {
            "kind": "verify",
            "check": self.name,
            "claim": self.claim,
            "ok": self.ok,
            "params": self.params,
            "evidence": self.evidence,
        }


# ---------------------------------------------------------------------------
# prime support helpers
# ---------------------------------------------------------------------------

def strip_common(x: int, y: int) -> int:
    """Divide out of ``x`` every prime that also divides ``y``."""
    g = gcd(x, y)
    while g > 1:
        x //= g
        g = gcd(x, g)
    return x


def same_prime_support(x: int, y: int) -> bool:
    return strip_common(x, y) == 1 and strip_common(y, x) == 1


def prime_signature(n: int, limit: int = 10**6) -> dict[str, Any]:
    """Primes of ``n`` by trial division up to ``limit``.

    The leftover cofactor is prime when it is below ``limit**2``; above that
    the signature is reported as undecided.
    """
    primes = []
    rest = abs(n)
    p = 2
    while p <= limit and p * p <= rest:
        if rest % p == 0:
            primes.append(p)
            while rest % p == 0:
                rest //= p
        p += 1 if p == 2 else 2
    status = "complete"
    if rest > 1:
        if rest < limit * limit or rest < p * p:
            primes.append(rest)
            rest = 1
        else:
            status = "undecided"
    return {"primes": primes, "cofactor": rest, "status": status}


# ---------------------------------------------------------------------------
# even n
# ---------------------------------------------------------------------------

@dataclass
class EvenCaseClassification:
    branch: str  # "i", "ii" or "iii"
    d: int
    n: int
    n1: int
    X_n1: int
    a: int
    m: int
    b: int
    ok: bool
    witness: dict[str, Any] = field(default_factory=dict)
    contradictions: list[str] = field(default_factory=list)

    def to_check(self) -> Check:
        return Check(
            "even-case",
            f"even n: branch {self.branch}",
            self.ok,
            {"d": self.d, "n": self.n, "a": self.a, "m": self.m, "b": self.b},
            {"n1": self.n1, "X_n1": self.X_n1, **self.witness, "contradictions": self.contradictions},
        )


def classify_even_solution(
    d: int, n: int, a: int, m: int, b: int, orbit: Optional[PellOrbit] = None
) -> EvenCaseClassification:
    if n < 2 or n % 2:
        raise ValueError("n must be even and positive")
    orbit = orbit or fundamental_solution(d)
    if orbit.d != d:
        raise ValueError("orbit does not belong to d")
    form = RepdigitForm(b, a, m)
    X_n = nth_solution(orbit, n).X
    if X_n != repdigit_value(form):
        raise ValueError(f"X_{n}({d}) = {X_n} is not {a}*({b}^{m}-1)/({b}-1)")
    n1 = n // 2
    x = nth_solution(orbit, n1).X
    if 2 * x * x - 1 != X_n:
        raise Falsified("X_2k = 2 X_k^2 - 1", {"d": d, "k": n1})

    contradictions = []
    witness: dict[str, Any] = {}
    if a < b - 1:
        branch = "i"
        m0, r = divmod(m, 3)
        y = b**m0
        X, Y = elliptic_map(x, y, a, b, r)
        inst = elliptic_params(a, b, r)
        witness = {"r": r, "m0": m0, "x": x, "y": y, "X": X, "Y": Y, "curve_A0": inst.curve_A0}
    elif m == 1:
        branch = "ii"
        witness = {"d_lt_b": d < b}
        if not d < b:
            contradictions.append("d >= b with a = b-1, m = 1")
    else:
        branch = "iii"
        X1 = orbit.X1
        k = (m - 1) // 2
        facts = {
            "b_even": b % 2 == 0,
            "two_x_sq_eq_b_pow_m": 2 * x * x == b**m,
            "n1_odd": n1 % 2 == 1,
            "pow2_divides_X1": X1 % (2**k) == 0,
            "x_support_is_b_support": same_prime_support(x, b),
        }
        witness = facts
        contradictions = [name for name, holds in facts.items() if not holds]
    return EvenCaseClassification(
        branch, d, n, n1, x, a, m, b, not contradictions, witness, contradictions
    )


def even_hits(b: int, d_max: int, n_max: int) -> list[tuple[int, int, RepdigitForm]]:
    """All (d, n, form) with n even <= n_max and X_n(d) a base-b repdigit."""
    out = []
    for d in range(2, d_max + 1):
        if is_square(d):
            continue
        for sol in iter_solutions(fundamental_solution(d)):
            if sol.n > n_max:
                break
            if sol.n % 2 == 0:
                form = as_repdigit(sol.X, b)
                if form is not None:
                    out.append((d, sol.n, form))
    return out


def even_uniqueness_check(b: int, d_max: int, n_max: int) -> Check:
    """At most one even n with digit b-1 and m > 1 per d, and X1, X3, X5 have
    pairwise different prime supports."""
    if b < 2 or b % 2:
        raise ValueError("b must be even")
    repeated = []
    same_support = []
    branch_iii = 0
    scanned = 0
    for d in range(2, d_max + 1):
        if is_square(d):
            continue
        scanned += 1
        orbit = fundamental_solution(d)
        idx = []
        xs = {}
        for sol in iter_solutions(orbit):
            if sol.n > max(n_max, 5):
                break
            if sol.n in (1, 3, 5):
                xs[sol.n] = sol.X
            if sol.n <= n_max and sol.n % 2 == 0:
                form = as_repdigit(sol.X, b)
                if form is not None and form.a == b - 1 and form.m > 1:
                    idx.append((sol.n, form.m))
        branch_iii += len(idx)
        if len(idx) > 1:
            repeated.append({"d": d, "hits": idx})
        for i, j in ((1, 3), (1, 5), (3, 5)):
            if same_prime_support(xs[i], xs[j]):
                same_support.append({"d": d, "pair": [i, j], "X": [xs[i], xs[j]]})
    return Check(
        "even-uniqueness",
        "one even n with a=b-1, m>1 per d; X1, X3, X5 prime supports distinct",
        not repeated and not same_support,
        {"b": b, "d_max": d_max, "n_max": n_max},
        {
            "d_scanned": scanned,
            "branch_iii_hits": branch_iii,
            "repeated": repeated,
            "same_support": same_support,
        },
    )


# ---------------------------------------------------------------------------
# elliptic reduction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EllipticInstance:
    """Curve data for digit ``a``, base ``b`` and ``m = 3 m0 + r``.

    ``A0`` is ``4a(b-1)^2 b^r ((b-1)-a)``, the constant as it is usually quoted
    for this reduction. ``curve_A0 = 8a^2(b-1)^3 b^(2r) ((b-1)-a)`` is the
    constant that the map ``X = 4a(b-1)^2 b^r x, Y = 2a(b-1) b^r y`` actually
    lands on; the two differ by the factor ``2a(b-1)b^r``.
    """

    a: int
    b: int
    r: int
    A0: int
    curve_A0: int
    point: Optional[tuple[int, int]] = None

    @property
    def degenerate(self) -> bool:
        return self.A0 == 0


def elliptic_params(a: int, b: int, r: int) -> EllipticInstance:
    if b < 2 or not 1 <= a <= b - 1:
        raise ValueError("need 1 <= a <= b-1")
    if r not in (0, 1, 2):
        raise ValueError("r must be 0, 1 or 2")
    gap = (b - 1) - a
    A0 = 4 * a * (b - 1) ** 2 * b**r * gap
    curve_A0 = 8 * a * a * (b - 1) ** 3 * b ** (2 * r) * gap
    return EllipticInstance(a, b, r, A0, curve_A0)


def satisfies_cubic_form(x: int, y: int, a: int, b: int, r: int) -> bool:
    """``2x^2 - 1 == a (b^r y^3 - 1)/(b - 1)``, cleared of the denominator."""
    return (2 * x * x - 1) * (b - 1) == a * (b**r * y**3 - 1)


def elliptic_map(x: int, y: int, a: int, b: int, r: int) -> tuple[int, int]:
    inst = elliptic_params(a, b, r)
    if inst.degenerate:
        raise ValueError("a = b-1 gives A0 = 0; use classify_even_solution")
    if not satisfies_cubic_form(x, y, a, b, r):
        raise ValueError(f"(x, y) = ({x}, {y}) does not satisfy 2x^2-1 = a(b^r y^3-1)/(b-1)")
    X = 4 * a * (b - 1) ** 2 * b**r * x
    Y = 2 * a * (b - 1) * b**r * y
    if X * X != Y**3 + inst.curve_A0:
        raise Falsified("X^2 = Y^3 + curve_A0", {"x": x, "y": y, "a": a, "b": b, "r": r})
    return X, Y


def cubic_form_solutions(a: int, b: int, r: int, x_max: int, y_max: int) -> list[tuple[int, int]]:
    """All ``0 <= x <= x_max, 1 <= y <= y_max`` with ``2x^2-1 = a(b^r y^3-1)/(b-1)``."""
    out = []
    for y in range(1, y_max + 1):
        num = a * (b**r * y**3 - 1)
        q, rem = divmod(num, b - 1)
        if rem or (q + 1) % 2:
            continue
        x = isqrt((q + 1) // 2)
        if x <= x_max and satisfies_cubic_form(x, y, a, b, r):
            out.append((x, y))
    return out


def enumerate_integer_points(A0: int, y_max: int) -> list[tuple[int, int]]:
    """Integer points of ``X^2 = Y^3 + A0`` with ``|Y| <= y_max``."""
    if A0 == 0:
        raise ValueError("A0 must be nonzero")
    points = []
    for Y in range(-y_max, y_max + 1):
        s = Y**3 + A0
        if s >= 0 and is_square(s):
            X = isqrt(s)
            points.append((X, Y))
            if X:
                points.append((-X, Y))
    return sorted(points, key=lambda p: (p[1], p[0]))


# ---------------------------------------------------------------------------
# odd n: gcd reduction
# ---------------------------------------------------------------------------

def gcd_reduction(a1: int, m1: int, a2: int, m2: int, b: int) -> tuple[int, int]:
    """Reduce two repdigits to ``gcd = a3c * (b^m3 - 1)/(b - 1)`` with ``m3 = gcd(m1, m2)``."""
    RepdigitForm(b, a1, m1)
    RepdigitForm(b, a2, m2)
    g = gcd(a1 * repunit(b, m1), a2 * repunit(b, m2))
    m3 = gcd(m1, m2)
    r3 = repunit(b, m3)
    evidence = {"a1": a1, "m1": m1, "a2": a2, "m2": m2, "b": b, "gcd": g}
    if g % r3:
        raise Falsified("(b^m3-1)/(b-1) divides the gcd", evidence)
    a3c = g // r3
    a3 = gcd(a1, a2)
    if a3c * a3 > a1 * a2 or a3c > (b - 1) ** 2:
        raise Falsified("a3c <= a1 a2 / a3 <= (b-1)^2", {**evidence, "a3c": a3c})
    return a3c, m3


def pell_gcd_check(orbit: PellOrbit, n1: int, n2: int) -> Check:
    x1 = nth_solution(orbit, n1).X
    x2 = nth_solution(orbit, n2).X
    x3 = nth_solution(orbit, gcd(n1, n2)).X
    return Check(
        "pell-gcd",
        "X_gcd(n1,n2) = gcd(X_n1, X_n2) for odd n1, n2",
        gcd(x1, x2) == x3,
        {"d": orbit.d, "n1": n1, "n2": n2},
        {} if gcd(x1, x2) == x3 else {"gcd": gcd(x1, x2), "X_n3": x3},
    )


@dataclass(frozen=True)
class ReducedInstance:
    """Odd-index system after the gcd step.

    ``X_1 = a (b^m - 1)/(b - 1)`` with ``a <= (b-1)^2`` and
    ``X_n = c (b^(m*ell) - 1)/(b - 1)`` in the orbit seeded at ``(X_1, 1)``.
    """

    b: int
    a: int
    m: int
    c: int
    ell: int
    n: int
    D: int

    @property
    def X1(self) -> int:
        return self.a * repunit(self.b, self.m)


def reduce_odd_pair(
    b: int, n1: int, a1: int, m1: int, n2: int, a2: int, m2: int, orbit: PellOrbit
) -> ReducedInstance:
    """Relabel two odd-index repdigit hits as a :class:`ReducedInstance`.

    The hit with the larger index supplies ``n``, ``ell`` and ``c``.
    """
    if n1 % 2 == 0 or n2 % 2 == 0 or n1 == n2:
        raise ValueError("need two distinct odd indices")
    if n1 > n2:
        n1, a1, m1, n2, a2, m2 = n2, a2, m2, n1, a1, m1
    a3c, m3 = gcd_reduction(a1, m1, a2, m2, b)
    n3 = gcd(n1, n2)
    x3 = nth_solution(orbit, n3).X
    if x3 != a3c * repunit(b, m3):
        raise Falsified(
            "X_n3 = a3c (b^m3-1)/(b-1)", {"d": orbit.d, "n3": n3, "X_n3": x3, "a3c": a3c, "m3": m3}
        )
    return ReducedInstance(b, a3c, m3, a2, m2 // m3, n2 // n3, x3 * x3 - 1)


# ---------------------------------------------------------------------------
# odd n: Taylor congruence
# ---------------------------------------------------------------------------

TAYLOR_CLAIM = "X_n = P_n(-a/(b-1)) + P_n'(-a/(b-1)) * (a/(b-1)) * b^m  (mod b^2m)"


def taylor_congruence_check(
    b: int, a: int, m: int, n: int, c_expected: Optional[int] = None
) -> Check:
    if b < 2 or m < 1:
        raise ValueError("need b >= 2, m >= 1")
    if not 1 <= a <= (b - 1) ** 2:
        raise ValueError("need 1 <= a <= (b-1)^2")
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd")
    X1 = a * repunit(b, m)
    if X1 < 2:
        raise ValueError("X1 = a(b^m-1)/(b-1) must be >= 2")
    bm = b**m
    M = bm * bm
    inv = pow(b - 1, -1, M)
    h = a * inv % M
    X_n = nth_solution(PellOrbit.from_x(X1), n).X
    P, dP = chebyshev_pair_mod(n, -h, M)
    predicted = (P + dP * h * bm) % M
    ok = X_n % M == predicted
    evidence: dict[str, Any] = {"X_n_mod": X_n % M, "predicted": predicted}
    if a == b - 1:
        special = (-1 + n * n * bm) % M
        evidence["q_form"] = special
        ok = ok and X_n % M == special
    if c_expected is not None:
        form = as_repdigit(X_n, b)
        shape = form is not None and form.a == c_expected and form.m % m == 0
        evidence["c_form"] = shape
        if shape:
            # the left side reduces to -c/(b-1) modulo b^min(2m, m*ell)
            mod = b ** min(2 * m, form.m)
            lhs = -c_expected * pow(b - 1, -1, mod) % mod
            evidence["c_congruence"] = lhs == predicted % mod
            ok = ok and evidence["c_congruence"]
    return Check("taylor", TAYLOR_CLAIM, ok, {"b": b, "a": a, "m": m, "n": n}, evidence)


def q_expansion(n: int) -> tuple[int, int]:
    """``(Q_n(0), Q_n'(0))`` for ``Q_n(Y) = P_n(Y - 1)``."""
    return int(chebyshev_P(n, -1)), int(chebyshev_P_prime(n, -1))


# ---------------------------------------------------------------------------
# odd n: the beta / gamma system
# ---------------------------------------------------------------------------

def _gamma_rational_values(c: int, b: int) -> list[Fraction]:
    # gamma and 1/gamma when rational, else []
    D2 = c * c - (b - 1) ** 2
    if D2 < 0 or not is_square(D2):
        return []
    s = isqrt(D2)
    return [Fraction(-c + s, b - 1), Fraction(-c - s, b - 1)]


def lemma3_check(a: int, c: int, b: int, n: int) -> Check:
    """Decide exactly that ``beta^-n = beta^n = gamma^(+-1)`` has no solution.

    Two routes: a direct computation of ``beta^n`` in Q(sqrt(a^2-(b-1)^2)),
    and the root-of-unity argument (beta^2n = 1 forces a/(b-1) in
    {1, 1/2}, and then gamma = 1 forces c = -(b-1)).
    """
    if not 1 <= a < b - 1:
        raise ValueError("need 1 <= a < b-1")
    if not 1 <= c <= (b - 1) ** 2:
        raise ValueError("need 1 <= c <= (b-1)^2")
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd")
    beta = beta_element(a, b)
    if beta.norm() != 1:
        raise Falsified("N(beta) = 1", {"a": a, "b": b})
    bn = beta**n
    b_minus_n = bn.conjugate()
    direct_solution = False
    if bn == b_minus_n:
        direct_solution = bn.rational_value() in _gamma_rational_values(c, b)

    # orders 1, 2, 3, 6 force -a/(b-1) in {+-1, +-1/2}; a < b-1 leaves only 1/2
    if Fraction(a, b - 1) != Fraction(1, 2):
        branch = "beta-not-root-of-unity"
        unit_route_solution = False
    else:
        # beta is a primitive cube root of unity; gamma = 1 needs c = -(b-1) < 0
        branch = "gamma-contradiction"
        unit_route_solution = Fraction(1) in _gamma_rational_values(c, b)
    ok = not direct_solution and not unit_route_solution
    return Check(
        "lemma3",
        "beta^-n = beta^n = gamma^(+-1) has no solution",
        ok,
        {"a": a, "c": c, "b": b, "n": n},
        {"branch": branch, "beta_2n_is_one": bn == b_minus_n},
    )


def reduced_instances(b: int, m_max: int, n_max: int, a_max: Optional[int] = None) -> list[ReducedInstance]:
    """All reduced systems with ``m <= m_max`` and odd ``3 <= n <= n_max``."""
    a_max = (b - 1) ** 2 if a_max is None else a_max
    out = []
    for m in range(1, m_max + 1):
        for a in range(1, a_max + 1):
            X1 = a * repunit(b, m)
            if X1 < 2:
                continue
            for sol in iter_solutions(PellOrbit.from_x(X1)):
                if sol.n > n_max:
                    break
                if sol.n < 3 or sol.n % 2 == 0:
                    continue
                form = as_repdigit(sol.X, b)
                if form is not None and form.m % m == 0:
                    out.append(ReducedInstance(b, a, m, form.a, form.m // m, sol.n, X1 * X1 - 1))
    return out


def valuation_divisibility_check(
    b: int, a: int, c: int, n: int, m: int, require_instance: bool = True
) -> Check:
    """b^m divides the numerator of the quantity the reduced system makes small.

    Branches: ``case1`` when ``a = b-1``; ``product`` checks
    ``(beta^n - gamma)(beta^n - gamma^-1) = beta^2n + 2c/(b-1) beta^n + 1``;
    ``derivative`` applies when ``P_n(-a/(b-1)) + c/(b-1) = 0`` exactly.
    """
    params = {"b": b, "a": a, "c": c, "n": n, "m": m}
    if require_instance:
        X1 = a * repunit(b, m)
        if X1 < 2 or not 1 <= a <= (b - 1) ** 2 or not 1 <= c <= b - 1 or n % 2 == 0 or n < 3:
            raise ValueError("not a reduced odd-index system")
        X_n = nth_solution(PellOrbit.from_x(X1), n).X
        form = as_repdigit(X_n, b)
        if form is None or form.a != c or form.m % m:
            raise ValueError(f"X_{n} = {X_n} is not c(b^(m*ell)-1)/(b-1) with c={c}")
        params["ell"] = form.m // m
    bm = b**m
    x = Fraction(-a, b - 1)
    rhs = chebyshev_P(n, x) + Fraction(c, b - 1)
    evidence: dict[str, Any] = {"rhs": str(rhs)}
    if a == b - 1:
        branch = "case1"
        ok = (n * n) % bm == 0 if c == b - 1 else (b - 1 - c) % bm == 0
    elif rhs != 0:
        branch = "product"
        beta = beta_element(a, b)
        bn = beta**n
        E = bn * bn + Fraction(2 * c, b - 1) * bn + 1
        identity = E == 2 * bn * rhs
        if E.is_rational():
            coords = [E.rational_value()]
        else:
            coords = [E.u, E.v]
        evidence.update(
            identity=identity,
            rhs_numerator_divisible=numerator_divisible(rhs, bm),
            coords=[str(q) for q in coords],
        )
        ok = identity and numerator_divisible(rhs, bm) and all(numerator_divisible(q, bm) for q in coords)
    else:
        branch = "derivative"
        beta = beta_element(a, b)
        bn = beta**n
        diff = n * (bn - bn.inverse())
        coords = [diff.rational_value()] if diff.is_rational() else [diff.u, diff.v]
        dP = chebyshev_P_prime(n, x)
        evidence.update(P_prime=str(dP), coords=[str(q) for q in coords])
        ok = numerator_divisible(dP, bm) and all(numerator_divisible(q, bm) for q in coords)
    evidence["branch"] = branch
    return Check("valuation", "b^m divides the numerator (branch: " + branch + ")", ok, params, evidence)


# ---------------------------------------------------------------------------
# primitive divisors, mixed parity, brackets
# ---------------------------------------------------------------------------

def primitive_part(d: int, k: int, orbit: Optional[PellOrbit] = None) -> int:
    """``Y_k`` with every prime shared with some earlier ``Y_s`` removed."""
    if k < 2:
        raise ValueError("k must be >= 2")
    orbit = orbit or fundamental_solution(d)
    ys = []
    for sol in iter_solutions(orbit):
        ys.append(sol.Y)
        if sol.n == k:
            break
    u = ys[-1]
    for y in ys[:-1]:
        u = strip_common(u, y)
    return u


def mixed_parity_bound_check(b: int, m_prime: int, a: int) -> Check:
    """Bounds when a digit-(b-1) even solution coexists with an odd one.

    With ``2^floor((m'-1)/2) | a`` the chain is ``2^(m'-1) <= 2a^2 <= b^3``,
    so ``m' <= b^3`` and ``log d < m' log b <= b^3 log b < b^4``.
    """
    if b < 2 or b % 2:
        raise ValueError("b must be even")
    if m_prime < 1 or a < 1:
        raise ValueError("need m' >= 1 and a >= 1")
    m_prime_max = (2 * a * a).bit_length()  # largest m' with 2^(m'-1) <= 2a^2
    hypothesis = a % (2 ** ((m_prime - 1) // 2)) == 0
    steps = {
        "hypothesis_pow2_divides_a": hypothesis,
        "pow2_le_2a_sq": 2 ** (m_prime - 1) <= 2 * a * a,
        "two_a_sq_le_b_cubed": 2 * a * a <= b**3,
        "m_prime_le_b_cubed": m_prime_max <= b**3,
        # b^(b^3) < exp(b^4)  <=>  log b < b
        "log_d_lt_b4": True,
    }
    ok = (not hypothesis) or (steps["pow2_le_2a_sq"] and steps["m_prime_le_b_cubed"])
    if a <= b - 1:
        ok = ok and steps["two_a_sq_le_b_cubed"]
    return Check(
        "mixed-parity",
        "2^(m'-1) <= 2a^2 <= b^3, m' <= b^3, log d < b^4",
        ok,
        {"b": b, "m_prime": m_prime, "a": a},
        {"m_prime_max": m_prime_max, "log_d_bound": b**4, **steps},
    )


def bracket_check(a: int, b: int, m: int) -> Check:
    """``b^(m-1) < alpha < 2 b^(m+2) <= b^(m+3)`` for ``alpha = X1 + sqrt(X1^2 - 1)``.

    Only meaningful once ``m >= 100``; smaller m is rejected.
    """
    if m < 100:
        raise ValueError("bracket inequalities are only claimed for m >= 100")
    if not 1 <= a <= (b - 1) ** 2:
        raise ValueError("need 1 <= a <= (b-1)^2")
    X1 = a * repunit(b, m)
    # floor(sqrt(X1^2-1)) = X1 - 1 pins alpha strictly inside (2X1-1, 2X1)
    s = isqrt(X1 * X1 - 1)
    facts = {
        "sqrt_floor_is_X1_minus_1": s == X1 - 1,
        "lower": b ** (m - 1) < 2 * X1 - 1,
        "upper": 2 * X1 <= 2 * b ** (m + 2),
        "upper_weakened": 2 * b ** (m + 2) <= b ** (m + 3),
    }
    return Check(
        "brackets",
        "b^(m-1) < alpha < 2b^(m+2) <= b^(m+3)",
        all(facts.values()),
        {"a": a, "b": b, "m": m},
        facts,
    )
