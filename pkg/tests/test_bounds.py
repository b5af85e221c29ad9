from __future__ import annotations

import math
from decimal import Decimal, getcontext

import pytest
import sympy

from pellrep.bounds import (
    LOG_SCALE,
    MatveevParams,
    YuParams,
    baker_chain_holds,
    baker_log_bound,
    bound_report,
    compact_power,
    height_quadratic,
    invert_n_log_n,
    log_yu_bound,
    m_bound,
    m_bound_folded,
    matveev_lower,
    matveev_n_coefficient,
    n_bound_derived,
    n_bound_implicit,
    scaled_log_upper,
    yu_bound,
    yu_folded_coefficient,
    yu_specialized,
)


def yu_direct(t, D, p, e, f, H, B):
    # straight transcription, no logs
    return (
        19 * (20 * math.sqrt(t + 1) * D) ** (2 * (t + 1)) * e ** (t - 1)
        * p**f / (f * math.log(p)) ** 2 * math.log(math.e**5 * t * D)
        * math.prod(H) * math.log(B)
    )


def test_yu_instance():
    H = (math.log(2), math.log(2))
    v = yu_bound(YuParams(2, 4, 2, 1, 1, H, 3))
    assert 0 < v < math.inf
    assert v == pytest.approx(yu_direct(2, 4, 2, 1, 1, H, 3), rel=1e-13)
    assert v >= yu_direct(2, 4, 2, 1, 1, H, 3) * (1 - 1e-15)


def test_yu_validation():
    with pytest.raises(ValueError):
        YuParams(2, 4, 2, 5, 1, (1.0, 1.0), 3)
    with pytest.raises(ValueError):
        YuParams(2, 4, 3, 1, 1, (0.5, 2.0), 3)  # H below log 3
    with pytest.raises(ValueError):
        YuParams(2, 4, 2, 1, 1, (1.0, 1.0), 1)
    with pytest.raises(ValueError):
        YuParams(2, 4, 2, 1, 1, (1.0,), 3)


def test_yu_monotone():
    H = (1.0, 2.0)
    prev = 0.0
    for B in range(2, 200):
        v = log_yu_bound(YuParams(2, 4, 2, 1, 1, H, B))
        assert v >= prev
        prev = v
    for h in [0.7 + 0.1 * k for k in range(50)]:
        assert yu_bound(YuParams(2, 4, 2, 1, 1, (h, 1.0), 9)) <= yu_bound(YuParams(2, 4, 2, 1, 1, (h + 0.1, 1.0), 9))


def test_yu_folding_only_weakens():
    assert yu_folded_coefficient() <= 1.3e17
    for b in (2, 3, 6, 10, 12, 30, 100):
        for n in (3, 10, 10**3, 10**6):
            folded = m_bound_folded(b, n)
            for p in sympy.primefactors(b):
                for e in range(1, 5):
                    for f in range(1, 5 // e + 1):
                        if e * f <= 4:
                            assert yu_specialized(b, n, p, e, f) <= folded, (b, n, p, e, f)


def test_matveev():
    v = matveev_lower(MatveevParams(1, 1, 2, (0.16,)))
    expected = -1.4 * 30**4 * (1 + math.log(2)) * 0.16
    assert v == pytest.approx(expected, rel=1e-14) and v <= expected
    with pytest.raises(ValueError):
        MatveevParams(1, 1, 2, (0.1,))
    prev = 0.0
    for h in [0.16 + 0.05 * k for k in range(100)]:
        mag = -matveev_lower(MatveevParams(3, 2, 100, (h, 1.0, 1.0)))
        assert mag >= prev
        prev = mag


def test_matveev_chain_constant():
    c = matveev_n_coefficient()
    assert c == pytest.approx(1.4 * 30**6 * 3**4.5 * 4 * (1 + math.log(2)) * 8)
    # the rounded constant used downstream
    assert c < 1e13


def test_baker():
    assert baker_log_bound(1) == pytest.approx(2.3026e5, rel=1e-4)
    assert baker_log_bound(-5) == baker_log_bound(5)
    assert baker_log_bound(10) > baker_log_bound(9)
    assert baker_chain_holds(4 * 10**6 - 1, 10)
    with pytest.raises(ValueError):
        baker_log_bound(0)


def test_heights():
    assert height_quadratic(81, 2, 1) == pytest.approx(math.log(9), abs=1e-15)
    assert height_quadratic(81, 2, 1) <= 2 * math.log(20) < 4 * math.log(10)
    phi = (1 + math.sqrt(5)) / 2
    assert height_quadratic(1, -3, 1) == pytest.approx(math.log(phi), rel=1e-14)
    assert height_quadratic(0, 1, -2) == pytest.approx(math.log(2))
    assert height_quadratic(0, 3, -2) == pytest.approx(math.log(3))


def test_heights_against_mahler_measure():
    x = sympy.symbols("x")
    for A, B, C in [(9, 2, 9), (3, 7, 1), (5, -11, 2), (1, -6, 1), (2, 1, 3)]:
        roots = sympy.Poly(A * x**2 + B * x + C, x).nroots(n=30)
        mahler = math.log(A) + sum(math.log(max(1.0, abs(complex(r)))) for r in roots)
        assert height_quadratic(A, B, C) == pytest.approx(mahler / 2, rel=1e-12)


def test_m_bound():
    assert m_bound(2, 3) == pytest.approx(2e17 * 64 * math.log(3))
    assert m_bound(10, 1e22) == pytest.approx(1.013e25, rel=1e-3)
    assert m_bound(3, 100) < m_bound(4, 100) and m_bound(3, 100) < m_bound(3, 101)


def test_invert_n_log_n():
    T = math.e**2
    assert invert_n_log_n(T) == pytest.approx(29.56, abs=0.01)
    assert 20 / math.log(20) < T and 20 < invert_n_log_n(T)
    for T in [3.5 * 1.3**k for k in range(60)]:
        bound = invert_n_log_n(T)
        # every n with n / log n < T lies below the bound
        assert bound / math.log(bound) >= T


def test_n_chain():
    for b in (2, 3, 10, 100, 10**4):
        nd = n_bound_derived(b)
        assert nd <= 2e18 * math.log(b) ** 4
        assert 2e18 * math.log(b) ** 4 < 10**18 * b**4
        # the implicit inequality is satisfied at the derived value
        assert n_bound_implicit(b, nd) < nd


def test_bound_report_examples():
    r = bound_report(2)
    assert r.n_max == 16 * 10**18 and r.m_max == 128 * 10**20
    r10 = bound_report(10)
    assert r10.theorem_exponent == 10**200000
    te = r10.to_record()["theorem_exponent"]
    assert (te["mantissa"], te["base"], te["exponent"], te["text"]) == (1, 10, 200000, "10^200000")
    for b in range(2, 101):
        r = bound_report(b)
        assert r.ell_max <= 2 * r.n_max + 1
        assert r.ell_max <= 2 * 10**18 * b**4
    with pytest.raises(ValueError):
        bound_report(1)


def test_scaled_log_upper_is_tight():
    getcontext().prec = 80
    for b in (2, 3, 10, 97, 10**4):
        v = scaled_log_upper(1, b)
        exact = Decimal(b).ln() * LOG_SCALE
        assert Decimal(v) >= exact and Decimal(v) - exact <= 1


def test_compact_power():
    assert str(compact_power(100, 10**5)) == "10^200000"
    assert str(compact_power(20, 3)) == "20^3"
    assert compact_power(64, 2).value() == 64**2 == compact_power(64, 2).base ** compact_power(64, 2).exponent
    assert compact_power(1000, 7).base == 10
