"""Seeded sampling estimates of f(n) and g(n).

Each sample is one uniformly drawn preference string (``n`` random bits).  The
only other draw is a uniform variate for strings that are all-L or all-R at odd
``n``, where the seat is declared alone with probability ``1/n``.

Streams: every (seed, quantity, batch) triple gets its own generator built from
``SeedSequence(seed, spawn_key=(quantity, batch))`` feeding ``PCG64``.  Batch
results are merged by summing tallies, so the outcome depends only on
``(seed, samples, n, batch_size)``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from . import bitkernels
from .closed_form import f_closed, g_closed

RNG_ID = "numpy.PCG64/SeedSequence(seed, spawn_key=(stream, batch))"
DEFAULT_BATCH = 250_000

STREAM_F = 0
STREAM_G = 1


@dataclass
class SampleStats:
    n: int
    samples: int
    estimate: float
    standard_error: float
    seed: int
    rng_identifier: str = RNG_ID
    exact_reference: Fraction | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        for k, v in d.items():
            if isinstance(v, Fraction):
                d[k] = f"{v.numerator}/{v.denominator}"
        return d

    def within(self, k: float = 4.0) -> bool:
        """Estimate lies within ``k`` standard errors of the exact reference."""
        if self.exact_reference is None:
            raise ValueError("no exact reference attached")
        gap = abs(self.estimate - float(self.exact_reference))
        if self.standard_error == 0:
            return gap == 0
        return gap <= k * self.standard_error


def _stderr(p: float, samples: int) -> float:
    return math.sqrt(p * (1 - p) / samples)


def batch_generator(seed: int, stream: int, batch: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(stream, batch))
    return np.random.Generator(np.random.PCG64(ss))


def batch_seeds(
    seed: int, samples: int, batch_size: int, stream: int
) -> Iterator[tuple[np.random.Generator, int]]:
    done = 0
    b = 0
    while done < samples:
        size = min(batch_size, samples - done)
        yield batch_generator(seed, stream, b), size
        done += size
        b += 1


def _draw(rng: np.random.Generator, n: int, size: int) -> np.ndarray:
    return rng.integers(0, 1 << n, size=size, dtype=np.uint64, endpoint=False)


def _f_hits(n: int, size: int, rng: np.random.Generator) -> int:
    x = _draw(rng, n, size)
    hits = int(bitkernels.seat0_unmatched(x, n).sum())
    if n % 2:
        n_irregular = int((~bitkernels.regular(x, n)).sum())
        if n_irregular:
            hits += int((rng.random(n_irregular) * n < 1).sum())
    return hits


def _g_hits(n: int, size: int, rng: np.random.Generator) -> int:
    x = _draw(rng, n, size)
    if n % 2:
        return 0
    return int(bitkernels.everyone_matched(x, n).sum()) + int((~bitkernels.regular(x, n)).sum())


def _run(kernel, n: int, seed: int, samples: int, stream: int, batch_size: int, workers: int) -> int:
    if n < 1 or n > bitkernels.MAX_BITS:
        raise ValueError(f"n must be in 1..{bitkernels.MAX_BITS}, got {n}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    jobs = list(batch_seeds(seed, samples, batch_size, stream))
    if workers <= 1:
        return sum(kernel(n, size, rng) for rng, size in jobs)
    with ThreadPoolExecutor(workers) as pool:
        return sum(pool.map(lambda job: kernel(n, job[1], job[0]), jobs))


def sample_f(
    n: int, seed: int, samples: int, batch_size: int = DEFAULT_BATCH, workers: int = 1
) -> SampleStats:
    hits = _run(_f_hits, n, seed, samples, STREAM_F, batch_size, workers)
    p = hits / samples
    return SampleStats(n, samples, p, _stderr(p, samples), seed, exact_reference=f_closed(n))


def sample_g(
    n: int, seed: int, samples: int, batch_size: int = DEFAULT_BATCH, workers: int = 1
) -> SampleStats:
    hits = _run(_g_hits, n, seed, samples, STREAM_G, batch_size, workers)
    p = hits / samples
    return SampleStats(n, samples, p, _stderr(p, samples), seed, exact_reference=g_closed(n))
