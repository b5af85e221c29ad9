"""Exhaustive scan for moduli d whose Pell X-coordinates hit two base-b repdigits."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import log2
from typing import Any, Optional

from .pell_core import PellOrbit, fundamental_solution, is_square, iter_solutions, nth_solution
from .repdigit import as_repdigit
from .structure import Falsified, classify_even_solution, reduce_odd_pair

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchConfig:
    b: int
    d_max: int
    n_max: int
    m_cap: int = 10**6
    include_m1: bool = True
    shards: int = 1
    squarefree_only: bool = False

    def __post_init__(self) -> None:
        if self.b < 2:
            raise ValueError("base must be >= 2")
        if self.d_max < 2:
            raise ValueError("d_max must be >= 2")
        if self.n_max < 1 or self.m_cap < 1 or self.shards < 1:
            raise ValueError("n_max, m_cap and shards must be >= 1")


@dataclass
class SearchHit:
    d: int
    hits: list[tuple[int, int, int, int]]  # (n, a, m, X_n)
    annotations: list[dict[str, Any]] = field(default_factory=list)

    @property
    def odd(self) -> int:
        return sum(1 for n, *_ in self.hits if n % 2)

    @property
    def even(self) -> int:
        return len(self.hits) - self.odd

    @property
    def trivial(self) -> bool:
        """Every hit is a single digit."""
        return all(m == 1 for _, _, m, _ in self.hits)

    def to_record(self) -> dict[str, Any]:
        rec: dict[str, Any] = {
            "kind": "hit",
            "d": self.d,
            "hits": [{"n": n, "a": a, "m": m, "X": X} for n, a, m, X in self.hits],
            "odd": self.odd,
            "even": self.even,
            "trivial": self.trivial,
        }
        if self.annotations:
            rec["annotations"] = self.annotations
        return rec


@dataclass
class SearchReport:
    config: SearchConfig
    hits: list[SearchHit]
    d_scanned: int
    d_with_hit: int

    @property
    def totals(self) -> dict[str, int]:
        nontrivial = sum(1 for h in self.hits if not h.trivial)
        return {
            "d_scanned": self.d_scanned,
            "d_with_hit": self.d_with_hit,
            "multi_hit": len(self.hits),
            "nontrivial": nontrivial,
            "trivial": len(self.hits) - nontrivial,
        }


def is_squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def _has_more_digits(x: int, b: int, m: int) -> bool:
    """``x >= b**m`` without building ``b**m`` unless the bit lengths are close."""
    est = m * log2(b)
    bits = x.bit_length()
    if bits > est + 2:
        return True
    if bits < est - 2:
        return False
    return x >= b**m


def scan_d(
    b: int, d: int, n_max: int, m_cap: int = 10**6, include_m1: bool = True,
    orbit: Optional[PellOrbit] = None,
) -> Optional[SearchHit]:
    """Indices n <= n_max with X_n(d) a base-b repdigit of at most m_cap digits."""
    if is_square(d) or d < 2:
        raise ValueError(f"d={d} must be a nonsquare integer >= 2")
    orbit = orbit or fundamental_solution(d)
    found = []
    prev = 1
    for sol in iter_solutions(orbit):
        if sol.n > n_max:
            break
        # X_n strictly increases, so the digit ceiling can end the scan early
        assert sol.X > prev
        prev = sol.X
        if _has_more_digits(sol.X, b, m_cap):
            break
        form = as_repdigit(sol.X, b)
        if form is not None and (include_m1 or form.m > 1):
            found.append((sol.n, form.a, form.m, sol.X))
    return SearchHit(d, found) if found else None


def _scan_range(args: tuple[SearchConfig, int, int]) -> tuple[list[SearchHit], int, int]:
    cfg, lo, hi = args
    multi = []
    scanned = with_hit = 0
    for d in range(lo, hi):
        if is_square(d) or (cfg.squarefree_only and not is_squarefree(d)):
            continue
        scanned += 1
        hit = scan_d(cfg.b, d, cfg.n_max, cfg.m_cap, cfg.include_m1)
        if hit is None:
            continue
        with_hit += 1
        if len(hit.hits) >= 2:
            multi.append(hit)
    return multi, scanned, with_hit


def _shard_bounds(d_max: int, shards: int) -> list[tuple[int, int]]:
    total = d_max - 1  # d in [2, d_max]
    step, extra = divmod(total, shards)
    out, lo = [], 2
    for i in range(shards):
        hi = lo + step + (1 if i < extra else 0)
        if hi > lo:
            out.append((lo, hi))
        lo = hi
    return out


def _reverify(hit: SearchHit, b: int) -> None:
    orbit = fundamental_solution(hit.d)
    for n, a, m, X in hit.hits:
        x = nth_solution(orbit, n).X
        form = as_repdigit(x, b)
        if x != X or form is None or (form.a, form.m) != (a, m):
            raise Falsified("re-derived hit matches", {"d": hit.d, "n": n})


def search(config: SearchConfig) -> SearchReport:
    """Scan ``2 <= d <= d_max``; keep moduli with at least two hits.

    Work is split into contiguous d intervals; results are merged in d order
    so the report does not depend on the shard count.
    """
    ranges = [(config, lo, hi) for lo, hi in _shard_bounds(config.d_max, config.shards)]
    if config.shards == 1 or len(ranges) == 1:
        parts = [_scan_range(r) for r in ranges]
    else:
        with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
            parts = list(pool.map(_scan_range, ranges))
    hits = sorted((h for part, _, _ in parts for h in part), key=lambda h: h.d)
    for h in hits:
        _reverify(h, config.b)
    report = SearchReport(
        config,
        hits,
        d_scanned=sum(p[1] for p in parts),
        d_with_hit=sum(p[2] for p in parts),
    )
    log.info("search b=%d d_max=%d: %s", config.b, config.d_max, report.totals)
    return report


def classify_report(report: SearchReport) -> SearchReport:
    """Attach a structural annotation to each hit of each multi-hit modulus.

    Even indices go through the even-case classification; each pair of odd
    indices is reduced to the single-orbit system via the gcd step.
    """
    b = report.config.b
    for hit in report.hits:
        orbit = fundamental_solution(hit.d)
        notes: list[dict[str, Any]] = []
        for n, a, m, _ in hit.hits:
            if n % 2 == 0:
                cls = classify_even_solution(hit.d, n, a, m, b, orbit)
                notes.append({"n": n, "case": "even", "branch": cls.branch, "ok": cls.ok})
            else:
                notes.append({"n": n, "case": "odd"})
        odd = [h for h in hit.hits if h[0] % 2]
        for i in range(len(odd)):
            for j in range(i + 1, len(odd)):
                (n1, a1, m1, _), (n2, a2, m2, _) = odd[i], odd[j]
                inst = reduce_odd_pair(b, n1, a1, m1, n2, a2, m2, orbit)
                notes.append(
                    {
                        "case": "odd-pair",
                        "pair": [n1, n2],
                        "a": inst.a,
                        "m": inst.m,
                        "c": inst.c,
                        "ell": inst.ell,
                        "n": inst.n,
                        "D": inst.D,
                        "generalized_digit": inst.a > b - 1,
                    }
                )
        hit.annotations = notes
    return report

