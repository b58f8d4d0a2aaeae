import pytest
from hypothesis import given, settings

from circletable.core import Matching, Preferences, Regularity, all_preferences, classify
from circletable.stability import (
    CapExceeded,
    OutcomeKind,
    Zone2,
    all_matchings,
    all_stable_matchings_bruteforce,
    everyone_matched,
    gap_lengths,
    is_stable_characterized,
    is_stable_def,
    is_unmatched,
    stable_set,
    unique_stable_matching,
    zone_decomposition,
)

from test_core import prefs_strategy

M = Matching.from_pairs


@pytest.mark.parametrize(
    "text, matching, expected",
    [
        ("RRLR", M(4, [(0, 1), (2, 3)]), False),
        ("RRLR", M(4, [(1, 2), (3, 0)]), True),
        ("RL", M(2, [(0, 1)]), True),
        ("RL", Matching.empty(2), False),
        ("RRRR", Matching.empty(4), False),
    ],
)
def test_is_stable_def(text, matching, expected):
    assert is_stable_def(text, matching) is expected


@pytest.mark.parametrize(
    "text, matching, expected",
    [
        ("RRLR", M(4, [(0, 1), (2, 3)]), False),
        ("RLLRL", M(5, [(0, 1), (3, 4)]), True),
        ("RRRR", Matching.empty(4), False),
    ],
)
def test_is_stable_characterized(text, matching, expected):
    assert is_stable_characterized(text, matching) is expected


def test_four_cycle_has_seven_matchings():
    assert len(all_matchings(4)) == 7
    # Lucas numbers count matchings of a cycle
    assert [len(all_matchings(n)) for n in range(3, 11)] == [4, 7, 11, 18, 29, 47, 76, 123]


def test_all_matchings_sorted_and_distinct():
    ms = all_matchings(6)
    keys = [m.partner for m in ms]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


@pytest.mark.parametrize(
    "text, partner",
    [("RRLR", (3, 2, 1, 0)), ("RLLRL", (1, 0, 2, 4, 3)), ("RL", (1, 0)), ("LR", (1, 0))],
)
def test_unique_stable_matching_examples(text, partner):
    m = unique_stable_matching(text)
    assert m.partner == partner
    assert all_stable_matchings_bruteforce(text) == [m]


def test_unique_stable_matching_rejects_irregular():
    with pytest.raises(ValueError):
        unique_stable_matching("LLLL")


def test_zone_example_from_stretch():
    # stretch LLR: the two L's fill zone 1, a lone R is too few for zone 3
    (stretch,) = [s for s in zone_decomposition("LRLLLRRLL") if s.length == 3]
    assert (stretch.zone1, stretch.zone2, stretch.zone3) == (2, Zone2.SINGLE_R, 0)


def test_zone_pair_lr():
    (stretch,) = zone_decomposition("RLLR")
    assert (stretch.zone1, stretch.zone2, stretch.zone3) == (0, Zone2.PAIR_LR, 0)
    assert unique_stable_matching("RLLR").is_perfect()


def test_stable_set_outcomes():
    out = stable_set("RRRR")
    assert out.kind is OutcomeKind.TWO_PERFECT
    assert [m.partner for m in out.matchings] == [(1, 0, 3, 2), (3, 2, 1, 0)]
    assert stable_set("LLL").kind is OutcomeKind.NO_STABLE
    assert stable_set("LLL").matchings == ()
    out = stable_set("RRLR")
    assert out.kind is OutcomeKind.UNIQUE_STABLE
    assert out.matchings == (unique_stable_matching("RRLR"),)
    assert [m.partner for m in stable_set("RR").matchings] == [(1, 0)]


@pytest.mark.parametrize("text, count", [("RRLR", 1), ("RRRR", 2), ("LLL", 0), ("L", 0), ("LL", 1)])
def test_bruteforce_counts(text, count):
    assert len(all_stable_matchings_bruteforce(text)) == count


def test_bruteforce_cap():
    with pytest.raises(CapExceeded):
        all_stable_matchings_bruteforce("R" * 17)
    assert all_stable_matchings_bruteforce("R" * 17, cap=17) == []


@pytest.mark.parametrize("text, i, expected", [("RLLRL", 2, True), ("RRLR", 3, False), ("RL", 0, False)])
def test_is_unmatched(text, i, expected):
    assert is_unmatched(text, i) is expected


@pytest.mark.parametrize(
    "text, expected",
    [("RRLLLRLRRR", True), ("LRLLRRLLRR", True), ("RLLRL", False), ("RLRL", True), ("RLLRLL", False)],
)
def test_everyone_matched(text, expected):
    assert everyone_matched(text) is expected


def test_gap_lengths():
    assert gap_lengths("RLLRL") == [1, 0]
    assert gap_lengths("RRLR") == [2]


@pytest.mark.parametrize("n", range(1, 11))
def test_checker_equivalence_exhaustive(n):
    for p in all_preferences(n):
        for m in all_matchings(n):
            assert is_stable_def(p, m) == is_stable_characterized(p, m), (p.labels, m)


@pytest.mark.parametrize("n", range(1, 13))
def test_constructor_against_bruteforce(n):
    for p in all_preferences(n):
        found = all_stable_matchings_bruteforce(p)
        if classify(p) is Regularity.REGULAR:
            u = unique_stable_matching(p)
            assert found == [u], p.labels
            for i in range(n):
                assert is_unmatched(p, i) == (u.partner[i] == i)
            assert everyone_matched(p) == u.is_perfect()
        else:
            assert found == list(stable_set(p).matchings), p.labels


@settings(max_examples=300)
@given(prefs_strategy(min_n=2, max_n=60))
def test_constructed_matching_is_valid_and_stable(p):
    if classify(p) is not Regularity.REGULAR:
        return
    m = unique_stable_matching(p)
    Matching(m.partner)  # re-validate invariants
    assert is_stable_def(p, m)
    assert is_stable_characterized(p, m)
    for st in zone_decomposition(p):
        assert st.zone1 % 2 == 0 and st.zone3 % 2 == 0
        assert st.length - st.zone1 - st.zone3 == len(st.zone2.value)
    assert sorted(m.unmatched()) == [i for i in range(p.n) if is_unmatched(p, i)]


def test_matching_size_mismatch():
    with pytest.raises(ValueError):
        is_stable_def(Preferences.parse("RL"), Matching.empty(3))
