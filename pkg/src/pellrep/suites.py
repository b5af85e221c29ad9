"""Batch runs of the structural checks over small parameter boxes."""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from .pell_core import fundamental_solution, is_square
from .repdigit import gcd_power_minus_one
from .structure import (
    Check,
    Falsified,
    bracket_check,
    classify_even_solution,
    cubic_form_solutions,
    elliptic_map,
    elliptic_params,
    even_hits,
    even_uniqueness_check,
    gcd_reduction,
    lemma3_check,
    mixed_parity_bound_check,
    pell_gcd_check,
    primitive_part,
    reduced_instances,
    taylor_congruence_check,
    valuation_divisibility_check,
)


def _falsified(name: str, exc: Falsified, params: dict) -> Check:
    return Check(name, exc.claim, False, params, exc.evidence)


def even_case_suite(bases: list[int], d_max: int = 500, n_max: int = 8) -> list[Check]:
    out = []
    for b in bases:
        for d, n, form in even_hits(b, d_max, n_max):
            out.append(classify_even_solution(d, n, form.a, form.m, b).to_check())
        if b % 2 == 0:
            out.append(even_uniqueness_check(b, min(d_max, 300), n_max))
    return out


def gcd_suite(d_max: int = 50, n_max: int = 13, b_max: int = 12, m_max: int = 12) -> list[Check]:
    out = []
    odd = range(1, n_max + 1, 2)
    for d in range(2, d_max + 1):
        if is_square(d):
            continue
        orbit = fundamental_solution(d)
        out.extend(pell_gcd_check(orbit, n1, n2) for n1, n2 in combinations(odd, 2))
    bad = []
    for b in range(2, b_max + 1):
        for m1 in range(1, m_max + 1):
            for m2 in range(1, m_max + 1):
                try:
                    gcd_power_minus_one(b, m1, m2)
                except AssertionError:
                    bad.append([b, m1, m2])
    out.append(
        Check(
            "gcd-power",
            "gcd(b^m1-1, b^m2-1) = b^gcd(m1,m2)-1",
            not bad,
            {"b_max": b_max, "m_max": m_max},
            {"failures": bad},
        )
    )
    for b in range(2, min(b_max, 10) + 1):
        failures = []
        for a1 in range(1, b):
            for a2 in range(1, b):
                for m1 in range(1, 9):
                    for m2 in range(1, 9):
                        try:
                            a3c, _ = gcd_reduction(a1, m1, a2, m2, b)
                        except Falsified as exc:
                            failures.append(exc.evidence)
                            continue
                        if a3c >= b * b:
                            failures.append({"a1": a1, "a2": a2, "m1": m1, "m2": m2, "a3c": a3c})
        out.append(
            Check(
                "gcd-reduction",
                "gcd of two repdigits = a3c (b^m3-1)/(b-1) with a3c < b^2",
                not failures,
                {"b": b, "m_max": 8},
                {"failures": failures},
            )
        )
    return out


def taylor_suite(bases: list[int], m_max: int = 4, n_max: int = 9) -> list[Check]:
    out = []
    for b in bases:
        for a in range(1, b):
            for m in range(1, m_max + 1):
                if a * (b**m - 1) // (b - 1) < 2:
                    continue
                for n in range(1, n_max + 1, 2):
                    out.append(taylor_congruence_check(b, a, m, n))
    return out


def lemma3_suite(base_max: int = 12, n_max: int = 9) -> list[Check]:
    out = []
    for b in range(3, base_max + 1):
        for a in range(1, b - 1):
            for c in range(1, (b - 1) ** 2 + 1):
                for n in range(1, n_max + 1, 2):
                    out.append(lemma3_check(a, c, b, n))
    return out


def primitive_suite(ds: list[int], k_min: int = 13, k_max: int = 25) -> list[Check]:
    out = []
    for d in ds:
        orbit = fundamental_solution(d)
        for k in range(k_min, k_max + 1):
            part = primitive_part(d, k, orbit)
            out.append(
                Check(
                    "primitive",
                    "Y_k has a prime not dividing any earlier Y_s (k >= 13)",
                    part > 1,
                    {"d": d, "k": k},
                    {"primitive_part_bits": part.bit_length()},
                )
            )
    return out


def elliptic_suite(base_max: int = 10, x_max: int = 10**4, y_max: int = 100) -> list[Check]:
    """Map every small solution of the cubic form onto its curve.

    Also records whether the points satisfy the quoted constant ``A0`` and the
    size claim ``|A0| < 4 b^6`` for both constants.
    """
    out = []
    points = 0
    off_quoted = []
    for b in range(3, base_max + 1):
        for a in range(1, b - 1):
            for r in (0, 1, 2):
                inst = elliptic_params(a, b, r)
                for x, y in cubic_form_solutions(a, b, r, x_max, y_max):
                    params = {"a": a, "b": b, "r": r, "x": x, "y": y}
                    try:
                        X, Y = elliptic_map(x, y, a, b, r)
                    except Falsified as exc:
                        out.append(_falsified("elliptic-map", exc, params))
                        continue
                    points += 1
                    if X * X != Y**3 + inst.A0:
                        off_quoted.append({**params, "X": X, "Y": Y, "A0": inst.A0})
    out.append(
        Check(
            "elliptic-map",
            "X^2 = Y^3 + 8a^2(b-1)^3 b^(2r) ((b-1)-a) for mapped points",
            True,
            {"base_max": base_max, "x_max": x_max, "y_max": y_max},
            {"points": points},
        )
    )
    out.append(
        Check(
            "elliptic-quoted-constant",
            "X^2 = Y^3 + 4a(b-1)^2 b^r ((b-1)-a) for mapped points",
            not off_quoted,
            {"base_max": base_max, "x_max": x_max, "y_max": y_max},
            {"points": points, "off_curve": len(off_quoted), "examples": off_quoted[:5]},
        )
    )
    size_fail = []
    for b in range(2, max(base_max, 20) + 1):
        for a in range(1, b):
            for r in (0, 1, 2):
                if abs(elliptic_params(a, b, r).A0) >= 4 * b**6:
                    size_fail.append([a, b, r])
    out.append(
        Check(
            "elliptic-size",
            "|A0| < 4 b^6 for the quoted constant",
            not size_fail,
            {"base_max": max(base_max, 20)},
            {"failures": size_fail},
        )
    )
    return out


def brackets_suite(bases: list[int], m_values: list[int] | None = None) -> list[Check]:
    m_values = m_values or [100]
    out = []
    for b in bases:
        for a in sorted({1, b - 1}):
            for m in m_values:
                out.append(bracket_check(a, b, m))
    return out


def valuation_suite(base_max: int = 10, m_max: int = 1, n_max: int = 9) -> list[Check]:
    out = []
    found = 0
    for b in range(2, base_max + 1):
        for inst in reduced_instances(b, m_max, n_max):
            found += 1
            out.append(valuation_divisibility_check(b, inst.a, inst.c, inst.n, inst.m))
    if not found:
        out.append(
            Check("valuation", "at least one instance in range", False, {"base_max": base_max}, {})
        )
    return out


def mixed_parity_suite(base_max: int = 20) -> list[Check]:
    out = []
    for b in range(2, base_max + 1, 2):
        for a in range(1, b):
            v = (a & -a).bit_length() - 1  # nu_2(a)
            # largest m' allowed by 2^floor((m'-1)/2) | a
            out.append(mixed_parity_bound_check(b, 2 * v + 1, a))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "even-case": even_case_suite,
    "gcd": gcd_suite,
    "taylor": taylor_suite,
    "lemma3": lemma3_suite,
    "primitive": primitive_suite,
    "elliptic": elliptic_suite,
    "brackets": brackets_suite,
    "valuation": valuation_suite,
    "mixed-parity": mixed_parity_suite,
}
