from __future__ import annotations

import cmath
from fractions import Fraction
from math import isqrt

import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.solvers.diophantine.diophantine import diop_DN

from pellrep.pell_core import (
    PellOrbit,
    PellPair,
    chebyshev_P,
    chebyshev_P_prime,
    chebyshev_coefficients,
    chebyshev_pair_mod,
    fundamental_solution,
    is_square,
    iter_solutions,
    nth_solution,
    nu_p,
)

NONSQUARE_100 = [d for d in range(2, 101) if isqrt(d) ** 2 != d]


def brute_force_fundamental(d: int) -> tuple[int, int]:
    y = 1
    while True:
        x2 = 1 + d * y * y
        x = isqrt(x2)
        if x * x == x2:
            return x, y
        y += 1


def test_is_square_examples():
    assert is_square(0)
    assert not is_square(2)
    n = 4503599761588225
    assert is_square(n) == (isqrt(n) ** 2 == n)
    assert is_square(67108865**2)
    assert not is_square(-4)


@pytest.mark.parametrize("d,expected", [(2, (3, 2)), (3, (2, 1)), (7, (8, 3))])
def test_fundamental_small(d, expected):
    orbit = fundamental_solution(d)
    assert (orbit.X1, orbit.Y1) == expected


def test_fundamental_61_matches_sympy():
    orbit = fundamental_solution(61)
    assert (orbit.X1, orbit.Y1) == (1766319049, 226153980)
    (x, y), = diop_DN(61, 1)
    assert (orbit.X1, orbit.Y1) == (x, y)


@pytest.mark.parametrize("d", [0, 1, 4, 49, -3])
def test_fundamental_rejects(d):
    with pytest.raises(ValueError):
        fundamental_solution(d)


def test_fundamental_agrees_with_sympy_up_to_1000():
    for d in range(2, 1001):
        if is_square(d):
            continue
        orbit = fundamental_solution(d)
        (x, y), = diop_DN(d, 1)
        assert (orbit.X1, orbit.Y1) == (x, y), d


def test_nth_solution_examples():
    orbit = fundamental_solution(2)
    assert (nth_solution(orbit, 3).X, nth_solution(orbit, 3).Y) == (99, 70)
    assert nth_solution(orbit, 2).X == 17
    first = nth_solution(orbit, 1)
    assert (first.X, first.Y) == (orbit.X1, orbit.Y1)
    with pytest.raises(ValueError):
        nth_solution(orbit, 0)


def test_nth_solution_matches_power_expansion():
    for d in NONSQUARE_100:
        orbit = fundamental_solution(d)
        s = sympy.symbols("s")
        z = sympy.rem(sympy.Poly((orbit.X1 + orbit.Y1 * s) ** 7, s), sympy.Poly(s**2 - d, s))
        y, x = z.all_coeffs()
        assert (nth_solution(orbit, 7).X, nth_solution(orbit, 7).Y) == (x, y)


def test_orbit_identities():
    for d in NONSQUARE_100:
        sols = {s.n: s for s in _take(fundamental_solution(d), 15)}
        for n, s in sols.items():
            assert s.X**2 - d * s.Y**2 == 1
        for k in range(1, 8):
            assert sols[2 * k].X == 2 * sols[k].X ** 2 - 1
            assert sols[2 * k].Y == 2 * sols[k].X * sols[k].Y
        for n in range(1, 16, 2):
            assert sols[n].X % sols[1].X == 0
            assert nu_p(sols[n].X, 2) == nu_p(sols[1].X, 2)


def _take(orbit: PellOrbit, n: int) -> list[PellPair]:
    out = []
    for s in iter_solutions(orbit):
        if s.n > n:
            break
        out.append(s)
    return out


def test_iter_strictly_increasing():
    xs = [s.X for s in _take(fundamental_solution(13), 10)]
    assert xs == sorted(set(xs))


def test_orbit_from_x_not_fundamental():
    # 99^2 - 1 = 9800 = 2 * 70^2, fundamental solution of 9800 is (99, 1)
    orbit = PellOrbit.from_x(99)
    assert orbit.d == 9800
    assert nth_solution(orbit, 2).X == 2 * 99**2 - 1
    with pytest.raises(ValueError):
        PellOrbit(2, 4, 1)


def test_chebyshev_examples():
    assert chebyshev_P(2, 3) == 17
    assert all(chebyshev_P(n, 1) == 1 for n in range(1, 30))
    assert chebyshev_P_prime(1, Fraction(7, 3)) == 1
    assert chebyshev_P_prime(2, 3) == 12


def test_chebyshev_complex_closed_form():
    x = Fraction(-1, 2)
    value = chebyshev_P(3, x)
    assert value == 1  # cos(3 * 2pi/3)
    for n in range(1, 12):
        for q in (Fraction(-1, 2), Fraction(3, 7), Fraction(5, 2), Fraction(-9, 4)):
            z = complex(float(q))
            s = cmath.sqrt(z * z - 1)
            closed = ((z + s) ** n + (z - s) ** n) / 2
            assert abs(float(chebyshev_P(n, q)) - closed.real) <= 1e-12 * max(1, abs(closed))
            if z * z != 1:
                dclosed = n * ((z + s) ** n - (z - s) ** n) / (2 * s)
                assert abs(float(chebyshev_P_prime(n, q)) - dclosed.real) <= 1e-12 * max(1, abs(dclosed))


def test_chebyshev_matches_sympy():
    X = sympy.symbols("X")
    for n in range(1, 25):
        poly = sympy.Poly(sympy.chebyshevt(n, X), X)
        assert chebyshev_coefficients(n) == [int(c) for c in reversed(poly.all_coeffs())]
        for q in (Fraction(2, 3), Fraction(-5, 4)):
            s = sympy.Rational(q.numerator, q.denominator)
            assert chebyshev_P(n, q) == Fraction(str(poly.eval(s)))
            assert chebyshev_P_prime(n, q) == Fraction(str(poly.diff(X).eval(s)))


def test_chebyshev_gives_pell_x():
    for d in NONSQUARE_100:
        orbit = fundamental_solution(d)
        for s in _take(orbit, 15):
            assert chebyshev_P(s.n, Fraction(orbit.X1)) == s.X


def test_chebyshev_mod():
    for n in range(1, 20):
        for x in (-7, 3, 12345):
            P, dP = chebyshev_pair_mod(n, x, 10**6)
            assert P == chebyshev_P(n, x) % 10**6
            assert dP == chebyshev_P_prime(n, x) % 10**6


def test_nu_p():
    assert nu_p(48, 2) == 4
    assert nu_p(99, 3) == 2
    assert nu_p(-40, 2) == 3
    for b in (2, 6, 10, 12):
        for m in range(1, 8):
            for p in sympy.primefactors(b):
                assert nu_p(b**m - 1, p) == 0
    with pytest.raises(ValueError):
        nu_p(0, 3)


@given(st.integers(min_value=1, max_value=10**12), st.sampled_from([2, 3, 5, 7, 11]))
def test_nu_p_matches_multiplicity(k, p):
    assert nu_p(k, p) == sympy.multiplicity(p, k)
