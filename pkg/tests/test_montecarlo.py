import json
import math
from fractions import Fraction

import pytest

from circletable.closed_form import f_closed, g_closed
from circletable.montecarlo import RNG_ID, SampleStats, sample_f, sample_g


def test_sample_f_twelve():
    s = sample_f(12, seed=42, samples=10**6)
    assert s.exact_reference == Fraction(7, 64)
    assert s.within(4)


def test_sample_f_nine():
    assert sample_f(9, seed=7, samples=10**6).within(4)


def test_sample_f_two_is_zero():
    s = sample_f(2, seed=123, samples=5000)
    assert s.estimate == 0 and s.standard_error == 0


def test_sample_f_one_is_one():
    assert sample_f(1, seed=0, samples=1000).estimate == 1


def test_sample_g_six():
    assert sample_g(6, seed=1, samples=10**6).within(4)


def test_sample_g_odd_is_zero():
    assert sample_g(9, seed=5, samples=1000).estimate == 0


def test_sample_g_beyond_enumeration():
    s = sample_g(40, seed=3, samples=10**7)
    assert s.exact_reference == g_closed(40)
    assert s.within(4)


def test_standard_error_formula():
    s = sample_f(10, seed=8, samples=20_000)
    assert s.standard_error == math.sqrt(s.estimate * (1 - s.estimate) / s.samples)
    assert 0 <= s.estimate <= 1


def test_determinism_and_worker_independence():
    a = sample_f(11, seed=9, samples=300_000, batch_size=50_000)
    b = sample_f(11, seed=9, samples=300_000, batch_size=50_000, workers=4)
    assert a == b
    assert sample_f(11, seed=10, samples=300_000, batch_size=50_000) != a


def test_stream_isolation():
    # the f stream must not depend on whether a g request ran, or on its size
    before = sample_f(10, seed=77, samples=100_000)
    sample_g(10, seed=77, samples=12_345)
    assert sample_f(10, seed=77, samples=100_000) == before


def test_calibration_coverage():
    target = float(f_closed(10))
    assert f_closed(10) == Fraction(27, 256)
    inside = 0
    for seed in range(100):
        s = sample_f(10, seed=seed, samples=10**5)
        inside += abs(s.estimate - target) <= 2 * s.standard_error
    assert inside >= 90


def test_serialization():
    s = sample_f(5, seed=2, samples=1000)
    d = s.to_dict()
    assert d["rng_identifier"] == RNG_ID
    assert d["seed"] == 2
    assert d["exact_reference"] == "1/5"
    json.dumps(d)


def test_within_needs_reference():
    with pytest.raises(ValueError):
        SampleStats(3, 10, 0.1, 0.01, 0).within()


@pytest.mark.parametrize("n, samples", [(0, 10), (64, 10), (5, 0)])
def test_bad_arguments(n, samples):
    with pytest.raises(ValueError):
        sample_f(n, seed=1, samples=samples)
