"""Vectorised structural tests over arrays of encoded preference strings.

Bit ``i`` of an encoding is 1 when seat ``i`` prefers R.  These mirror the
scalar functions in :mod:`circletable.stability` for seat 0 and for the whole
table, and are cross-checked against them in the test suite.
"""
from __future__ import annotations

import numpy as np

MAX_BITS = 63


def _full(n: int) -> np.uint64:
    return np.uint64((1 << n) - 1)


def natural_pair_mask(x: np.ndarray, n: int) -> np.ndarray:
    """Bit ``i`` set where seat ``i`` is R and seat ``i+1`` is L."""
    x = x.astype(np.uint64, copy=False)
    # bit i of `nxt` is bit i+1 of x, wrapping
    nxt = (x >> np.uint64(1)) | ((x & np.uint64(1)) << np.uint64(n - 1))
    return x & ~nxt & _full(n)


def regular(x: np.ndarray, n: int) -> np.ndarray:
    return (x != 0) & (x != _full(n))


def seat0_unmatched(x: np.ndarray, n: int) -> np.ndarray:
    """Seat 0 alone in the unique stable matching (regular strings only).

    Both the leftward distance to the first R and the rightward distance to the
    first L must be even.  Irregular entries come back False.
    """
    x = x.astype(np.uint64, copy=False)
    s = np.zeros(x.shape, dtype=np.int64)
    t = np.zeros(x.shape, dtype=np.int64)
    for k in range(1, n + 1):
        left_bit = (x >> np.uint64((n - k) % n)) & np.uint64(1)
        right_bit = (x >> np.uint64(k % n)) & np.uint64(1)
        s = np.where((s == 0) & (left_bit == 1), k, s)
        t = np.where((t == 0) & (right_bit == 0), k, t)
    return regular(x, n) & (s % 2 == 0) & (t % 2 == 0)


def everyone_matched(x: np.ndarray, n: int) -> np.ndarray:
    """Regular strings whose natural pairs are all an even distance apart.

    Consecutive pairs starting at ``a`` and ``b`` leave ``b - a - 2`` seats
    between them, so every gap is even exactly when all pair starts share a
    parity and ``n`` is even (the wrap-around gap adds ``n``).
    Irregular entries come back False.
    """
    if n % 2:
        return np.zeros(x.shape, dtype=bool)
    pairs = natural_pair_mask(x, n)
    even_pos = np.uint64(sum(1 << i for i in range(0, n, 2)))
    odd_pos = _full(n) & ~even_pos
    return regular(x, n) & (((pairs & even_pos) == 0) | ((pairs & odd_pos) == 0))
