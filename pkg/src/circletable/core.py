"""Tables, preference strings and matchings on a cycle of seats.

Seats are numbered ``0 .. n-1`` and all index arithmetic wraps modulo ``n``.
A preference string holds one label per seat: ``R`` if the seat prefers its
right neighbour ``i + 1``, ``L`` if it prefers its left neighbour ``i - 1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "ExactProb",
    "all_preferences",
    "Matching",
    "Preferences",
    "Regularity",
    "classify",
    "is_preferred",
    "left_distance",
    "natural_pairs",
    "right_distance",
]

# Exact probabilities are plain fractions; Fraction already keeps lowest terms.
ExactProb = Fraction


class Regularity(enum.Enum):
    REGULAR = "regular"
    IRREGULAR_ALL_L = "irregular_all_L"
    IRREGULAR_ALL_R = "irregular_all_R"


@dataclass(frozen=True)
class Preferences:
    """A length-``n`` circular L/R string.

    The canonical encoding is an integer ``bits`` in ``[0, 2**n)`` where bit
    ``i`` set means seat ``i`` prefers ``R``.
    """

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"table size must be positive, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"encoding {self.bits} out of range for n={self.n}")

    @classmethod
    def parse(cls, text: str) -> Preferences:
        text = text.strip()
        if not text:
            raise ValueError("empty preference string")
        bad = set(text) - {"L", "R"}
        if bad:
            raise ValueError(f"invalid preference characters: {''.join(sorted(bad))!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "R":
                bits |= 1 << i
        return cls(len(text), bits)

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> Preferences:
        return cls.parse("".join(labels))

    def label(self, i: int) -> str:
        return "R" if self.prefers_right(i) else "L"

    def prefers_right(self, i: int) -> bool:
        return bool((self.bits >> (i % self.n)) & 1)

    @property
    def labels(self) -> str:
        return "".join(self.label(i) for i in range(self.n))

    def preferred_neighbor(self, i: int) -> int:
        return (i + 1) % self.n if self.prefers_right(i) else (i - 1) % self.n

    def __str__(self) -> str:
        return self.labels


@dataclass(frozen=True)
class Matching:
    """Partner list over ``n`` seats; ``partner[i] == i`` means unmatched."""

    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.partner)
        if n < 1:
            raise ValueError("matching needs at least one seat")
        for i, j in enumerate(self.partner):
            if j not in ((i - 1) % n, i, (i + 1) % n):
                raise ValueError(f"seat {i} matched to non-neighbour {j}")
            if self.partner[j] != i:
                raise ValueError(f"matching is not mutual at seats {i} and {j}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Matching:
        partner = list(range(n))
        for a, b in pairs:
            a, b = a % n, b % n
            if partner[a] != a or partner[b] != b:
                raise ValueError(f"seat reused in pair ({a}, {b})")
            partner[a], partner[b] = b, a
        return cls(tuple(partner))

    @classmethod
    def empty(cls, n: int) -> Matching:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.partner)

    def unmatched(self) -> list[int]:
        return [i for i, j in enumerate(self.partner) if i == j]

    def is_perfect(self) -> bool:
        return all(i != j for i, j in enumerate(self.partner))

    def pairs(self) -> list[tuple[int, int]]:
        """Matched pairs as ``(i, i+1 mod n)`` edges, sorted by first seat."""
        n = self.n
        out = []
        for i, j in enumerate(self.partner):
            if j == (i + 1) % n and i != j:
                if n == 2 and i == 1:
                    continue
                out.append((i, j))
        return out

    def __str__(self) -> str:
        return " ".join(str(j) for j in self.partner)


def _coerce(prefs: Preferences | str) -> Preferences:
    return Preferences.parse(prefs) if isinstance(prefs, str) else prefs


def classify(prefs: Preferences | str) -> Regularity:
    prefs = _coerce(prefs)
    if prefs.bits == 0:
        return Regularity.IRREGULAR_ALL_L
    if prefs.bits == (1 << prefs.n) - 1:
        return Regularity.IRREGULAR_ALL_R
    return Regularity.REGULAR


def natural_pairs(prefs: Preferences | str) -> list[tuple[int, int]]:
    """Positions ``(i, i+1)`` where seat ``i`` is R and seat ``i+1`` is L."""
    prefs = _coerce(prefs)
    n = prefs.n
    return [
        (i, (i + 1) % n)
        for i in range(n)
        if prefs.prefers_right(i) and not prefs.prefers_right(i + 1)
    ]


def _require_regular(prefs: Preferences) -> None:
    if classify(prefs) is not Regularity.REGULAR:
        raise ValueError(f"{prefs} is irregular; distances are undefined")


def left_distance(prefs: Preferences | str, i: int) -> int:
    """Seats scanned leftwards from ``i`` until someone prefers R."""
    prefs = _coerce(prefs)
    _require_regular(prefs)
    for k in range(1, prefs.n + 1):
        if prefs.prefers_right(i - k):
            return k
    raise AssertionError("unreachable for regular preferences")


def right_distance(prefs: Preferences | str, i: int) -> int:
    """Seats scanned rightwards from ``i`` until someone prefers L."""
    prefs = _coerce(prefs)
    _require_regular(prefs)
    for k in range(1, prefs.n + 1):
        if not prefs.prefers_right(i + k):
            return k
    raise AssertionError("unreachable for regular preferences")


def is_preferred(prefs: Preferences | str, i: int) -> bool:
    prefs = _coerce(prefs)
    return prefs.prefers_right(i - 1) or not prefs.prefers_right(i + 1)


def all_preferences(n: int) -> Sequence[Preferences]:
    return [Preferences(n, b) for b in range(1 << n)]
