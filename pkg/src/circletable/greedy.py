"""Randomized greedy matching on paths and cycles.

Edges are picked uniformly at random among those whose endpoints are both
still free, until none are left.  After the first pick on an ``n``-cycle the
rest of the process is the same thing on a path of ``n - 2`` seats, so every
cycle quantity is a path quantity shifted by two.

Path recurrences (``m`` seats, ``m - 1`` edges; picking edge ``i`` leaves
independent paths of ``i - 1`` and ``m - i - 1`` seats)::

    u(m)  = 2/(m-1) * sum_{j<=m-2} u(j)                      expected singles
    pp(m) = 1/(m-1) * sum_{i=1}^{m-1} pp(i-1) pp(m-1-i)      P(perfect)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .montecarlo import RNG_ID, SampleStats, _stderr, batch_seeds


class GreedyTable:
    """Memo table for the path recurrences, grown on demand.

    ``u`` is kept as the integer sequence ``T(m) = m! * sum_{j<=m} u(j)``, which
    obeys ``T(m) = m T(m-1) + 2m T(m-2)``; then ``u(m) = 2 T(m-2) / (m-1)!``.
    This avoids a gcd per step when the table runs to thousands of seats.
    """

    def __init__(self) -> None:
        self._t = [0, 1]  # T(0) = 0, T(1) = u(1) = 1
        self._pp = [Fraction(1), Fraction(0)]

    @property
    def max_m(self) -> int:
        return len(self._t) - 1

    def _grow_u(self, m: int) -> None:
        t = self._t
        for k in range(len(t), m + 1):
            t.append(k * t[k - 1] + 2 * k * t[k - 2])

    def u(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError("path length must be >= 0")
        if m < 2:
            return Fraction(m)
        self._grow_u(m - 2)
        return Fraction(2 * self._t[m - 2], math.factorial(m - 1))

    def pp(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError("path length must be >= 0")
        pp = self._pp
        for k in range(len(pp), m + 1):
            if k % 2:
                pp.append(Fraction(0))
                continue
            acc = sum((pp[i - 1] * pp[k - 1 - i] for i in range(1, k)), Fraction(0))
            pp.append(acc / (k - 1))
        return pp[m]


_TABLE = GreedyTable()


def path_expected_unmatched(m: int) -> Fraction:
    return _TABLE.u(m)


def path_perfect_probability(m: int) -> Fraction:
    return _TABLE.pp(m)


def cycle_expected_unmatched(n: int) -> Fraction:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return path_expected_unmatched(n - 2)


def cycle_unmatched_probability(n: int) -> Fraction:
    return cycle_expected_unmatched(n) / n


def cycle_perfect_probability(n: int, lenient: bool = False) -> Fraction:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    if n % 2:
        if lenient:
            return Fraction(0)
        raise ValueError(f"odd cycle n={n} can never be perfectly matched")
    return path_perfect_probability(n - 2)


def greedy_cycle_once(n: int, rng: np.random.Generator) -> list[int]:
    """One run of the greedy process; returns the partner list."""
    partner = list(range(n))
    # edge e joins e and e+1; pos[e] is its slot in `avail` or -1
    avail = list(range(n))
    pos = list(range(n))

    def drop(e: int) -> None:
        k = pos[e]
        if k < 0:
            return
        last = avail.pop()
        if last != e:
            avail[k] = last
            pos[last] = k
        pos[e] = -1

    while avail:
        e = avail[int(rng.integers(len(avail)))]
        a, b = e, (e + 1) % n
        partner[a], partner[b] = b, a
        for x in (e - 1, e, e + 1):
            drop(x % n)
    return partner


def _greedy_batch(n: int, samples: int, rng: np.random.Generator) -> np.ndarray:
    """Unmatched counts for ``samples`` independent runs.

    Scanning all edges in a uniformly random order and keeping each one whose
    seats are still free picks, at every step, a uniform edge among those still
    available, so it is the same process as :func:`greedy_cycle_once`.
    """
    order = np.argsort(rng.random((samples, n)), axis=1)
    taken = np.zeros((samples, n), dtype=bool)
    rows = np.arange(samples)
    for step in range(n):
        e = order[:, step]
        f = (e + 1) % n
        free = ~taken[rows, e] & ~taken[rows, f]
        taken[rows[free], e[free]] = True
        taken[rows[free], f[free]] = True
    return n - taken.sum(axis=1)


@dataclass
class GreedyStats(SampleStats):
    perfect_estimate: float = 0.0
    perfect_standard_error: float = 0.0
    exact_perfect: Fraction | None = None
    parity_ok: bool = True


def simulate_greedy_cycle(
    n: int, seed: int, samples: int, batch_size: int = 200_000
) -> GreedyStats:
    """Monte Carlo of the greedy process on an ``n``-cycle.

    ``estimate`` is the per-seat unmatched frequency (pooled over all seats),
    ``perfect_estimate`` the fraction of runs with nobody alone.
    """
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    singles = 0
    sq = 0
    perfect = 0
    parity_ok = True
    for rng, size in batch_seeds(seed, samples, batch_size, stream=2):
        counts = _greedy_batch(n, size, rng)
        singles += int(counts.sum())
        sq += int((counts.astype(np.int64) ** 2).sum())
        perfect += int((counts == 0).sum())
        parity_ok &= bool(np.all(counts % 2 == n % 2))
    est = singles / (samples * n)
    # per-seat indicators within a run are correlated; use the run totals
    mean_count = singles / samples
    var_count = max(sq / samples - mean_count**2, 0.0)
    se = math.sqrt(var_count / samples) / n
    p_hat = perfect / samples
    return GreedyStats(
        n=n,
        samples=samples,
        estimate=est,
        standard_error=se,
        seed=seed,
        rng_identifier=RNG_ID,
        exact_reference=cycle_unmatched_probability(n),
        perfect_estimate=p_hat,
        perfect_standard_error=_stderr(p_hat, samples),
        exact_perfect=cycle_perfect_probability(n, lenient=True),
        parity_ok=parity_ok,
    )


def cycle_outcome_distribution(n: int) -> dict[int, Fraction]:
    """Exact law of the unmatched count by exhaustive search over pick orders.

    Exponential; used as an oracle for small tables only.
    """
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")

    @lru_cache(maxsize=None)
    def go(taken: int) -> tuple[tuple[int, Fraction], ...]:
        edges = [e for e in range(n) if not (taken >> e & 1 or taken >> ((e + 1) % n) & 1)]
        if not edges:
            return ((n - bin(taken).count("1"), Fraction(1)),)
        dist: dict[int, Fraction] = {}
        w = Fraction(1, len(edges))
        for e in edges:
            for k, p in go(taken | 1 << e | 1 << ((e + 1) % n)):
                dist[k] = dist.get(k, Fraction(0)) + w * p
        return tuple(sorted(dist.items()))

    return dict(go(0))
