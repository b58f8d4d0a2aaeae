"""Exact rational evaluation of the closed-form probabilities.

Nothing in here touches floating point except :func:`limits`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

ONE_NINTH = Fraction(1, 9)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class FormulaResult:
    n: int
    value: Fraction
    branch: str


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"table size must be >= 1, got {n}")


def f_closed(n: int) -> Fraction:
    """Probability a given seat ends up alone in the stable matching."""
    _check_n(n)
    half_n = Fraction(1, 2**n)
    if n % 2:
        return ONE_NINTH + half_n * (Fraction(2 * n, 3) - Fraction(8, 9) + Fraction(2, n))
    return ONE_NINTH - half_n * (Fraction(2 * n, 3) - Fraction(8, 9))


def g_closed(n: int) -> Fraction:
    """Probability nobody is left alone."""
    _check_n(n)
    if n % 2:
        return Fraction(0)
    return Fraction(3 ** (n // 2) - 1, 2 ** (n - 1))


def evaluate(quantity: str, n: int) -> FormulaResult:
    if quantity == "f":
        return FormulaResult(n, f_closed(n), "odd" if n % 2 else "even")
    if quantity == "g":
        return FormulaResult(n, g_closed(n), "odd" if n % 2 else "even")
    raise ValueError(f"no closed form for quantity {quantity!r}")


def appendix_double_sum(m: int) -> Fraction:
    """sum_{c=1}^{m-2} 4^-c sum_{d=1}^{m-1-c} 4^-d, term by term."""
    if m < 2:
        raise ValueError("m must be >= 2")
    total = Fraction(0)
    for c in range(1, m - 1):
        for d in range(1, m - c):
            total += QUARTER**c * QUARTER**d
    return total


def appendix_closed(m: int) -> Fraction:
    if m < 2:
        raise ValueError("m must be >= 2")
    return ONE_NINTH - QUARTER**m * (Fraction(4 * m, 3) - Fraction(8, 9))


def odd_overlap_term(m: int) -> Fraction:
    # n = 2m - 1: the m - 1 splits with s + t = n + 1, where the two scans share a seat
    if m < 2:
        raise ValueError("m must be >= 2")
    return (m - 1) * Fraction(1, 2 ** (2 * m - 2))


def irregular_odd_term(n: int) -> Fraction:
    """Contribution of the all-L and all-R strings for odd ``n``."""
    _check_n(n)
    if n % 2 == 0:
        raise ValueError(f"irregular_odd_term needs odd n, got {n}")
    return Fraction(1, 2 ** (n - 1) * n)


def greedy_sum(n: int) -> Fraction:
    """sum_{k=0}^{n-3} (-2)^k (n-2-k) / k!.

    This is the expected *number* of unmatched seats under randomized greedy
    matching on an ``n``-cycle, not a per-seat probability; divide by ``n``
    for that (see :func:`greedy_unmatched_probability`).
    """
    if n < 3:
        raise ValueError(f"greedy_sum needs n >= 3, got {n}")
    return sum(
        (Fraction((-2) ** k * (n - 2 - k), math.factorial(k)) for k in range(n - 2)),
        Fraction(0),
    )


def greedy_unmatched_probability(n: int) -> Fraction:
    return greedy_sum(n) / n


class Limits(NamedTuple):
    stable: float
    greedy: float


def limits() -> Limits:
    """Large-table limits: 1/9 for stable matching, e^-2 for randomized greedy."""
    return Limits(stable=1 / 9, greedy=math.exp(-2))
