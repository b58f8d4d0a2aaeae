"""Stability of matchings on the circular table.

Two independent stability tests live here: :func:`is_stable_def` searches for a
blocking pair directly, :func:`is_stable_characterized` checks the three
structural conditions (natural pairs together, preferred seats matched, no two
adjacent singles).  The unique stable matching of a regular string is built by
splitting each stretch between consecutive natural pairs into zones.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    Matching,
    Preferences,
    Regularity,
    _coerce,
    classify,
    is_preferred,
    left_distance,
    natural_pairs,
    right_distance,
)

DEFAULT_BRUTE_FORCE_CAP = 16


class CapExceeded(ValueError):
    """Requested size is above a configured enumeration cap."""


def _rank(prefs: Preferences, i: int, other: int) -> int:
    # lower is better: preferred neighbour, other neighbour, alone
    if other == i:
        return 2
    return 0 if other == prefs.preferred_neighbor(i) else 1


def is_stable_def(prefs: Preferences | str, m: Matching) -> bool:
    """True when no two adjacent seats would both rather talk to each other."""
    prefs = _coerce(prefs)
    n = prefs.n
    if m.n != n:
        raise ValueError(f"matching has {m.n} seats, preferences have {n}")
    if n == 1:
        # a lone seat has nobody to talk to; treated as having no stable matching
        return False
    p = m.partner
    for i in range(n):
        j = (i + 1) % n
        if p[i] == j:
            continue
        if _rank(prefs, i, j) < _rank(prefs, i, p[i]) and _rank(prefs, j, i) < _rank(prefs, j, p[j]):
            return False
    return True


def is_stable_characterized(prefs: Preferences | str, m: Matching) -> bool:
    prefs = _coerce(prefs)
    n = prefs.n
    if m.n != n:
        raise ValueError(f"matching has {m.n} seats, preferences have {n}")
    p = m.partner
    if any(p[a] != b for a, b in natural_pairs(prefs)):
        return False
    if any(p[i] == i and is_preferred(prefs, i) for i in range(n)):
        return False
    return not any(p[i] == i and p[(i + 1) % n] == (i + 1) % n for i in range(n))


class Zone2(enum.Enum):
    EMPTY = ""
    SINGLE_L = "L"
    SINGLE_R = "R"
    PAIR_LR = "LR"


@dataclass(frozen=True)
class Stretch:
    """Seats strictly between two circularly adjacent natural pairs.

    ``start`` is the first seat after the opening pair; ``zone1`` counts the
    leading L seats that pair up left-to-right, ``zone3`` the trailing R seats
    that pair up right-to-left.  Both are even.
    """

    start: int
    length: int
    zone1: int
    zone2: Zone2
    zone3: int

    def seats(self, n: int) -> list[int]:
        return [(self.start + k) % n for k in range(self.length)]


def zone_decomposition(prefs: Preferences | str) -> list[Stretch]:
    prefs = _coerce(prefs)
    if classify(prefs) is not Regularity.REGULAR:
        raise ValueError(f"{prefs} is irregular; it has no natural pairs")
    n = prefs.n
    starts = [a for a, _ in natural_pairs(prefs)]
    out = []
    for k, a in enumerate(starts):
        nxt = starts[(k + 1) % len(starts)]
        span = (nxt - a) % n or n
        length = span - 2
        first = (a + 2) % n
        labels = [prefs.label(first + d) for d in range(length)]
        n_left = labels.count("L")
        n_right = length - n_left
        # a stretch reads L...LR...R, otherwise it would contain another pair
        assert labels == ["L"] * n_left + ["R"] * n_right
        z1, z3 = n_left - n_left % 2, n_right - n_right % 2
        z2 = {(0, 0): Zone2.EMPTY, (1, 0): Zone2.SINGLE_L,
              (0, 1): Zone2.SINGLE_R, (1, 1): Zone2.PAIR_LR}[(n_left % 2, n_right % 2)]
        out.append(Stretch(first, length, z1, z2, z3))
    return out


def unique_stable_matching(prefs: Preferences | str) -> Matching:
    prefs = _coerce(prefs)
    n = prefs.n
    stretches = zone_decomposition(prefs)
    pairs = list(natural_pairs(prefs))
    for st in stretches:
        seats = st.seats(n)
        for k in range(0, st.zone1, 2):
            pairs.append((seats[k], seats[k + 1]))
        for k in range(0, st.zone3, 2):
            pairs.append((seats[-k - 2], seats[-k - 1]))
        if st.zone2 is Zone2.PAIR_LR:
            mid = st.zone1
            pairs.append((seats[mid], seats[mid + 1]))
    return Matching.from_pairs(n, pairs)


class OutcomeKind(enum.Enum):
    UNIQUE_STABLE = "unique"
    TWO_PERFECT = "two_perfect"
    NO_STABLE = "none"


@dataclass(frozen=True)
class StableOutcome:
    kind: OutcomeKind
    matchings: tuple[Matching, ...]


def perfect_matchings(n: int) -> tuple[Matching, ...]:
    """The perfect matchings of an even cycle, the one holding (0, 1) first."""
    if n % 2:
        return ()
    first = Matching.from_pairs(n, [(i, i + 1) for i in range(0, n, 2)])
    if n == 2:
        return (first,)
    second = Matching.from_pairs(n, [(i, (i + 1) % n) for i in range(1, n, 2)])
    return (first, second)


def stable_set(prefs: Preferences | str) -> StableOutcome:
    prefs = _coerce(prefs)
    if classify(prefs) is Regularity.REGULAR:
        return StableOutcome(OutcomeKind.UNIQUE_STABLE, (unique_stable_matching(prefs),))
    if prefs.n % 2 == 0:
        return StableOutcome(OutcomeKind.TWO_PERFECT, perfect_matchings(prefs.n))
    return StableOutcome(OutcomeKind.NO_STABLE, ())


@lru_cache(maxsize=None)
def all_matchings(n: int) -> tuple[Matching, ...]:
    """Every valid matching of the ``n``-cycle, sorted by partner sequence."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (Matching.empty(1),)
    if n == 2:
        return (Matching((1, 0)), Matching.empty(2))
    full = (1 << n) - 1
    found = []
    for mask in range(1 << n):
        # edge i joins seats i and i+1; edges i and i+1 share seat i+1
        rot = ((mask << 1) | (mask >> (n - 1))) & full
        if mask & rot:
            continue
        found.append(Matching.from_pairs(n, [(i, i + 1) for i in range(n) if mask >> i & 1]))
    return tuple(sorted(found, key=lambda m: m.partner))


def all_stable_matchings_bruteforce(
    prefs: Preferences | str, cap: int = DEFAULT_BRUTE_FORCE_CAP
) -> list[Matching]:
    prefs = _coerce(prefs)
    if prefs.n > cap:
        raise CapExceeded(f"n={prefs.n} exceeds brute-force cap {cap}")
    return [m for m in all_matchings(prefs.n) if is_stable_def(prefs, m)]


def is_unmatched(prefs: Preferences | str, i: int) -> bool:
    """Seat ``i`` is alone in the stable matching iff both scan distances are even."""
    prefs = _coerce(prefs)
    return left_distance(prefs, i) % 2 == 0 and right_distance(prefs, i) % 2 == 0


def gap_lengths(prefs: Preferences | str) -> list[int]:
    """Seat counts between circularly adjacent natural pairs."""
    prefs = _coerce(prefs)
    if classify(prefs) is not Regularity.REGULAR:
        raise ValueError(f"{prefs} is irregular; it has no natural pairs")
    n = prefs.n
    starts = [a for a, _ in natural_pairs(prefs)]
    return [((starts[(k + 1) % len(starts)] - a) % n or n) - 2 for k, a in enumerate(starts)]


def everyone_matched(prefs: Preferences | str) -> bool:
    return all(g % 2 == 0 for g in gap_lengths(prefs))
