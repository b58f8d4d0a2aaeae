"""Exhaustive enumeration over all 2**n preference strings.

Strings are visited by their integer encoding, so a shard is just a half-open
range ``[lo, hi)``.  Shard reports add component-wise; the full-range sum is
the exact ground truth for f(n) and g(n).
"""
from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction

import numpy as np

from . import bitkernels
from .core import Preferences, Regularity, classify
from .stability import CapExceeded, all_stable_matchings_bruteforce, everyone_matched, is_unmatched

DEFAULT_ENUM_CAP = 24
DEFAULT_CENSUS_CAP = 14
CHUNK = 1 << 20


@dataclass(frozen=True)
class EnumReport:
    """Tallies over a range of encodings for an ``n``-seat table.

    ``seat0_alone`` counts regular strings leaving seat 0 alone;
    ``even_spaced`` counts regular strings whose stable matching is perfect.
    """

    n: int
    lo: int
    hi: int
    regular: int = 0
    irregular_even: int = 0
    irregular_odd: int = 0
    seat0_alone: int = 0
    even_spaced: int = 0

    def __add__(self, other: EnumReport) -> EnumReport:
        if not isinstance(other, EnumReport):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("cannot combine reports for different n")
        if self.hi == other.lo:
            lo, hi = self.lo, other.hi
        elif other.hi == self.lo:
            lo, hi = other.lo, self.hi
        else:
            raise ValueError(f"ranges [{self.lo},{self.hi}) and [{other.lo},{other.hi}) are not adjacent")
        counts = {f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)[3:]}
        return EnumReport(self.n, lo, hi, **counts)

    @property
    def total_strings(self) -> int:
        return self.hi - self.lo

    @property
    def complete(self) -> bool:
        return self.lo == 0 and self.hi == 1 << self.n

    @property
    def unmatched_weight(self) -> Fraction:
        # all-L / all-R at odd n: one random seat of n is left out
        return self.seat0_alone + Fraction(self.irregular_odd, self.n)

    @property
    def perfect_count(self) -> int:
        return self.even_spaced + self.irregular_even

    @property
    def unmatched_probability(self) -> Fraction:
        return self.unmatched_weight / (1 << self.n)

    @property
    def perfect_probability(self) -> Fraction:
        return Fraction(self.perfect_count, 1 << self.n)

    def to_dict(self) -> dict:
        out: dict = {f.name: getattr(self, f.name) for f in fields(self)}
        out["total_strings"] = self.total_strings
        for name in ("unmatched_probability", "perfect_probability"):
            v = getattr(self, name)
            out[name] = f"{v.numerator}/{v.denominator}"
            out[name + "_float"] = float(v)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")


def _range_vector(n: int, lo: int, hi: int) -> EnumReport:
    regular = seat0 = spaced = 0
    for a in range(lo, hi, CHUNK):
        x = np.arange(a, min(a + CHUNK, hi), dtype=np.uint64)
        reg = bitkernels.regular(x, n)
        regular += int(reg.sum())
        seat0 += int(bitkernels.seat0_unmatched(x, n).sum())
        spaced += int(bitkernels.everyone_matched(x, n).sum())
    irregular = (hi - lo) - regular
    return EnumReport(
        n, lo, hi,
        regular=regular,
        irregular_even=0 if n % 2 else irregular,
        irregular_odd=irregular if n % 2 else 0,
        seat0_alone=seat0,
        even_spaced=spaced,
    )


def _range_scalar(n: int, lo: int, hi: int) -> EnumReport:
    c: Counter = Counter()
    for b in range(lo, hi):
        p = Preferences(n, b)
        if classify(p) is Regularity.REGULAR:
            c["regular"] += 1
            c["seat0_alone"] += is_unmatched(p, 0)
            c["even_spaced"] += everyone_matched(p)
        elif n % 2:
            c["irregular_odd"] += 1
        else:
            c["irregular_even"] += 1
    return EnumReport(n, lo, hi, **c)


def enumerate_range(n: int, lo: int, hi: int, engine: str = "vector") -> EnumReport:
    """Tallies over encodings in ``[lo, hi)``.

    ``engine="scalar"`` walks the strings one by one through the stability
    module; ``"vector"`` uses the numpy bit kernels.  They must agree.
    """
    if not 0 <= lo <= hi <= 1 << n:
        raise ValueError(f"malformed range [{lo}, {hi}) for n={n}")
    if engine == "vector":
        return _range_vector(n, lo, hi)
    if engine == "scalar":
        return _range_scalar(n, lo, hi)
    raise ValueError(f"unknown engine {engine!r}")


def shard_bounds(n: int, shards: int) -> list[tuple[int, int]]:
    total = 1 << n
    shards = max(1, min(shards, total))
    cuts = [total * k // shards for k in range(shards + 1)]
    return list(zip(cuts[:-1], cuts[1:]))


def enumerate_report(
    n: int,
    cap: int = DEFAULT_ENUM_CAP,
    shards: int = 1,
    workers: int = 1,
    engine: str = "vector",
) -> EnumReport:
    _check_cap(n, cap)
    bounds = shard_bounds(n, shards)
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda b: enumerate_range(n, *b, engine=engine), bounds))
    else:
        parts = [enumerate_range(n, lo, hi, engine=engine) for lo, hi in bounds]
    report = parts[0]
    for part in parts[1:]:
        report = report + part
    return report


def enumerate_f(n: int, cap: int = DEFAULT_ENUM_CAP, **kw) -> Fraction:
    return enumerate_report(n, cap, **kw).unmatched_probability


def enumerate_g(n: int, cap: int = DEFAULT_ENUM_CAP, **kw) -> Fraction:
    return enumerate_report(n, cap, **kw).perfect_probability


def count_perfect_strings(n: int, cap: int = DEFAULT_ENUM_CAP, **kw) -> int:
    if n % 2:
        raise ValueError(f"count_perfect_strings needs even n, got {n}")
    return enumerate_report(n, cap, **kw).perfect_count


def stable_count_census(n: int, cap: int = DEFAULT_CENSUS_CAP) -> dict[int, int]:
    """Histogram: number of stable matchings -> number of strings with that many."""
    _check_cap(n, cap)
    hist: Counter = Counter()
    for b in range(1 << n):
        hist[len(all_stable_matchings_bruteforce(Preferences(n, b), cap=cap))] += 1
    return dict(sorted(hist.items()))
