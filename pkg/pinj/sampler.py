# pinj
# SPDX-License-Identifier: MIT
"""Seeded Monte Carlo estimate of the rank of random products.

Trials are cut into blocks of the configured mc_block_size. Block j draws its
factors from SeedSequence(seed, spawn_key=(j,)), so the histogram depends on
the seed and the block size only, never on how many workers ran the blocks.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional, Tuple

import attr
import numpy as np

from pinj import config
from pinj.counting import is_card
from pinj.element import compose
from pinj.enumeration import unrank
from pinj.products import INT64_LIMIT, RankDistribution, composition_table, rank_distribution, rank_index

logger = logging.getLogger(__name__)

SEED_LIMIT = 1 << 64


@attr.frozen
class SampleReport:
    n: int
    k: int
    trials: int
    seed: int
    rank_histogram: Tuple[int, ...]
    empirical: Tuple[Fraction, ...]
    reference: RankDistribution
    max_abs_deviation: Fraction

    def passed(self, tolerance_sigmas: int = 4) -> bool:
        """Every rank frequency lies within tolerance_sigmas * sqrt(q(1-q)/trials)
        of its exact value q. Compared exactly, after squaring."""
        for observed, q in zip(self.empirical, self.reference.mass()):
            if (observed - q) ** 2 * self.trials > tolerance_sigmas ** 2 * q * (1 - q):
                return False
        return True

    def rows(self):
        for i, (count, observed, q) in enumerate(
                zip(self.rank_histogram, self.empirical, self.reference.mass())):
            yield {'rank': i, 'count': count, 'empirical': float(observed), 'exact': q}


def _generator(seed, block):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))


def _uniform_indices(rng, size, trials, k):
    # Generator.integers only takes bounds below INT64_LIMIT.
    if size < INT64_LIMIT:
        return rng.integers(0, size, size=(trials, k)).tolist()
    # Rejection on raw bytes past the int64 range.
    nbits = size.bit_length()
    nbytes = (nbits + 7) // 8
    draws = []
    for _ in range(trials * k):
        while True:
            x = int.from_bytes(rng.bytes(nbytes), 'little') >> (8 * nbytes - nbits)
            if x < size:
                draws.append(x)
                break
    return [draws[t * k:(t + 1) * k] for t in range(trials)]


class _Block(object):
    def __init__(self, n, k, seed, table):
        self.n = n
        self.k = k
        self.seed = seed
        self.table = table
        self.ranks = rank_index(n) if table is not None else None

    def __call__(self, job):
        block, trials = job
        rng = _generator(self.seed, block)
        size = is_card(self.n)
        if self.table is not None:
            draws = rng.integers(0, size, size=(trials, self.k))
            current = draws[:, 0]
            for t in range(1, self.k):
                current = self.table[current, draws[:, t]]
            return np.bincount(self.ranks[current], minlength=self.n + 1)

        histogram = np.zeros(self.n + 1, dtype=np.int64)
        for row in _uniform_indices(rng, size, trials, self.k):
            product = unrank(self.n, row[0])
            for index in row[1:]:
                product = compose(product, unrank(self.n, index))
            histogram[product.rank] += 1
        return histogram


def monte_carlo(n: int, k: int, trials: int, seed: int, workers: int = 1,
                settings: Optional[config.Settings] = None) -> SampleReport:
    """Sample `trials` products of k uniform factors from IS_n.

    Factors are drawn as enumeration indices and unranked; when IS_n is small
    enough the products are looked up in the composition table instead, with
    the same draws and therefore the same result.
    """
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    if k < 1:
        raise ValueError(f'product length k must be >= 1, got {k}')
    if trials < 1:
        raise ValueError(f'trials must be >= 1, got {trials}')
    if not 0 <= seed < SEED_LIMIT:
        raise ValueError(f'seed must be an unsigned 64-bit integer, got {seed}')
    if workers < 1:
        raise ValueError(f'workers must be >= 1, got {workers}')
    settings = settings or config.load()

    size = is_card(n)
    table = composition_table(n) if size * size <= settings.table_limit else None
    block_size = settings.mc_block_size
    jobs = [(j, min(block_size, trials - j * block_size))
            for j in range((trials + block_size - 1) // block_size)]
    logger.info('sampling %d products of %d factors in IS_%d with seed %d (%d blocks, %s)',
                trials, k, n, seed, len(jobs), 'table' if table is not None else 'unrank')

    run = _Block(n, k, seed, table)
    histogram = np.zeros(n + 1, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(run, jobs):
            histogram += partial

    counts = tuple(int(x) for x in histogram)
    reference = rank_distribution(n, k)
    empirical = tuple(Fraction(c, trials) for c in counts)
    deviation = max(abs(e - q) for e, q in zip(empirical, reference.mass()))
    return SampleReport(n, k, trials, seed, counts, empirical, reference, deviation)
