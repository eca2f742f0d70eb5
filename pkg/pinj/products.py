# pinj
# SPDX-License-Identifier: MIT
"""Exact rank distribution of random products in IS_n.

A product x_1 x_2 ... x_k of uniformly and independently chosen factors hits a
given element with a probability that only depends on the element's rank.
P[i] below is that probability for rank i. The vector P evolves under an upper
triangular integer matrix A:

>>> build_matrix(1).rows()
[[2, 1], [0, 1]]
>>> rank_distribution(1, 2).p
(Fraction(3, 4), Fraction(1, 4))
>>> rank_distribution(2, 2).p[2]
Fraction(2, 49)

All arithmetic is exact; floats only show up in report rendering.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import islice
from math import factorial
from typing import Iterator, List, Optional, Sequence, Tuple

import attr
import numpy as np
import sympy

from pinj import config
from pinj.checks import CheckReport, CheckResult, compare, info
from pinj.counting import binomial, falling, is_card, lah_number, partial_injection_count, rank_count
from pinj.element import compose
from pinj.enumeration import enumerate_elements
from pinj.errors import BudgetExceeded, MultiplicityOutOfRange, RankConstancyError

logger = logging.getLogger(__name__)

# Largest count an np.int64 fold can carry, plus one.
INT64_LIMIT = 1 << 63


def _exact(x):
    if x.is_Integer:
        return int(x)
    return Fraction(int(x.p), int(x.q))


def _sympy(x):
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    return sympy.Integer(x)


class RationalMatrix(object):
    """A square matrix of exact rationals.

    >>> m = RationalMatrix([[1, 2], [0, 3]])
    >>> m.apply([1, 1]), m.diagonal(), m.is_upper_triangular()
    ((3, 3), (1, 3), True)
    """

    def __init__(self, entries):
        self.matrix = sympy.Matrix([[_sympy(x) for x in row] for row in entries])
        if not self.matrix.is_square:
            raise ValueError(f'matrix must be square, got {self.matrix.shape}')

    @property
    def order(self) -> int:
        return self.matrix.rows

    def __getitem__(self, ij):
        return _exact(self.matrix[ij])

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.matrix == other.matrix

    def rows(self) -> List[list]:
        return [[_exact(x) for x in self.matrix.row(i)] for i in range(self.order)]

    def diagonal(self) -> tuple:
        return tuple(self[i, i] for i in range(self.order))

    def is_upper_triangular(self) -> bool:
        return bool(self.matrix.is_upper)

    def apply(self, vector: Sequence) -> tuple:
        if len(vector) != self.order:
            raise ValueError(f'vector of length {len(vector)} against order {self.order}')
        product = self.matrix * sympy.Matrix([_sympy(x) for x in vector])
        return tuple(_exact(x) for x in product)

    def to_json(self):
        return {'order': self.order, 'entries': self.rows()}

    def __repr__(self):
        return f'RationalMatrix({self.rows()})'


@lru_cache(maxsize=None)
def _entries(n: int) -> Tuple[Tuple[int, ...], ...]:
    # A[i][j]: ways for a rank-j prefix product and the next factor to land on
    # a fixed rank-i element.
    return tuple(
        tuple(binomial(n - i, j - i) * binomial(n, j) * factorial(j)
              * partial_injection_count(n - i, n - j) if i <= j else 0
              for j in range(n + 1))
        for i in range(n + 1))


def build_matrix(n: int) -> RationalMatrix:
    """The transition matrix A of order n+1.

    >>> build_matrix(3).diagonal()
    (34, 21, 12, 6)
    """
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    return RationalMatrix(_entries(n))


def basis_change_matrix(n: int) -> RationalMatrix:
    """T, whose j-th column is the eigenvector f_j of A."""
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    return RationalMatrix([
        [(-1) ** (j - i) * rank_count(n - i, j - i) if i <= j else 0 for j in range(n + 1)]
        for i in range(n + 1)])


@attr.frozen
class RankDistribution:
    """P[i] for i = 0..n: chance the k-fold product equals one fixed rank-i element."""

    n: int
    k: int
    p: Tuple[Fraction, ...]

    def mass(self) -> Tuple[Fraction, ...]:
        """Chance the product has rank i: P[i] times the number of rank-i elements."""
        return tuple(p * rank_count(self.n, i) for i, p in enumerate(self.p))

    def total(self) -> Fraction:
        return sum(self.mass(), Fraction(0))

    def rows(self):
        for i, (p, mass) in enumerate(zip(self.p, self.mass())):
            yield {'rank': i, 'p': p, 'elements': rank_count(self.n, i), 'mass': mass}


def _product_vectors(n: int) -> Iterator[List[int]]:
    """A^(k-1) (1, ..., 1) for k = 1, 2, ...

    Repeated matrix-vector products on plain integers; no matrix power.
    """
    a = _entries(n)
    v = [1] * (n + 1)
    while True:
        yield v
        v = [sum(a[i][j] * v[j] for j in range(i, n + 1)) for i in range(n + 1)]


def _check_k(k):
    if k < 1:
        raise ValueError(f'product length k must be >= 1, got {k}')


def _distribution(n, k, vector):
    scale = is_card(n) ** k
    return RankDistribution(n, k, tuple(Fraction(x, scale) for x in vector))


def rank_distribution(n: int, k: int) -> RankDistribution:
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    _check_k(k)
    vector = next(islice(_product_vectors(n), k - 1, None))
    return _distribution(n, k, vector)


def _distributions(n, k_max):
    for k, vector in enumerate(islice(_product_vectors(n), k_max), start=1):
        yield _distribution(n, k, vector)


def prob_of_subset(dist: RankDistribution, multiplicities: Sequence[int]) -> Fraction:
    """Chance the product lands in a set with multiplicities[i] elements of rank i.

    >>> prob_of_subset(rank_distribution(1, 2), [1, 0])
    Fraction(3, 4)
    """
    multiplicities = list(multiplicities)
    if len(multiplicities) != dist.n + 1:
        raise MultiplicityOutOfRange(
            f'expected {dist.n + 1} multiplicities, got {len(multiplicities)}')
    for i, m in enumerate(multiplicities):
        if not 0 <= m <= rank_count(dist.n, i):
            raise MultiplicityOutOfRange(
                f'multiplicity {m} of rank {i} is outside [0, {rank_count(dist.n, i)}]')
    return sum((m * p for m, p in zip(multiplicities, dist.p)), Fraction(0))


def nilpotent_multiplicities(n: int) -> List[int]:
    return [lah_number(n, n - i) for i in range(n + 1)]


def nilpotent_probability(n: int, k: int) -> Fraction:
    """Chance the k-fold product is nilpotent."""
    return prob_of_subset(rank_distribution(n, k), nilpotent_multiplicities(n))


@attr.frozen
class Eigenpair:
    value: int
    vector: Tuple[int, ...]


def eigenbasis(n: int) -> List[Eigenpair]:
    """The eigenvectors f_0..f_n of A with their eigenvalues.

    >>> [(e.value, e.vector) for e in eigenbasis(1)]
    [(2, (1, 0)), (1, (-1, 1))]
    """
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    return [
        Eigenpair(
            falling(n, k) * is_card(n - k),
            tuple((-1) ** (k - j) * rank_count(n - j, k - j) if j <= k else 0
                  for j in range(n + 1)))
        for k in range(n + 1)]


def spectral_distribution(n: int, k: int) -> RankDistribution:
    """P recomputed from the eigen-expansion of (1, ..., 1)."""
    _check_k(k)
    vector = [0] * (n + 1)
    for j, pair in enumerate(eigenbasis(n)):
        weight = is_card(n - j) * pair.value ** (k - 1)
        for i, f in enumerate(pair.vector):
            vector[i] += weight * f
    return _distribution(n, k, vector)


def verify_spectral_identities(n: int) -> CheckReport:
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    a = build_matrix(n)
    basis = eigenbasis(n)
    diagonal = a.diagonal()
    report = CheckReport()

    report.extend([
        CheckResult('upper-triangular', True, None, a.is_upper_triangular()),
        compare('eigenvalues-on-diagonal', tuple(e.value for e in basis), diagonal),
        compare('eigen-equations',
                tuple(a.apply(e.vector) for e in basis),
                tuple(tuple(e.value * f for f in e.vector) for e in basis)),
        CheckResult('distinct-eigenvalues', diagonal, None,
                    all(x > y for x, y in zip(diagonal, diagonal[1:]))),
    ])

    # Ratio of consecutive eigenvalues against (m+1)/m with m = n-i; the
    # bound is strict for m >= 2 and met with equality at m = 1.
    ratios = [(Fraction(diagonal[i], diagonal[i + 1]), Fraction(n - i + 1, n - i))
              for i in range(n)]
    report.extend([CheckResult(
        'eigenvalue-ratio', tuple(r for r, _ in ratios[:-1]), None,
        all(r > bound for r, bound in ratios[:-1]))])
    if n >= 1:
        r, bound = ratios[-1]
        report.extend([compare('eigenvalue-ratio-at-last-rank', r, bound)])

    report.extend([
        compare('alternating-rank-sum',
                sum((-1) ** k * is_card(n - k) * rank_count(n, k) for k in range(n + 1)), 1),
        compare('eigenbasis-coordinates',
                basis_change_matrix(n).apply([is_card(n - j) for j in range(n + 1)]),
                (1,) * (n + 1)),
        compare('inclusion-exclusion',
                tuple(sum((-1) ** i * binomial(k, i) * partial_injection_count(n, n - i)
                          for i in range(k + 1)) for k in range(n + 1)),
                tuple(falling(n, k) * is_card(n - k) for k in range(n + 1))),
    ])
    logger.debug('spectral identities at n=%d: %s', n, 'pass' if report.passed else 'FAIL')
    return report


def _rank_reduction(n, k, i):
    """P[i] rebuilt from the rank-0 probability of IS_{n-i}."""
    zero = rank_distribution(n - i, k).p[0]
    return Fraction(is_card(n - i), is_card(n)) ** k * falling(n, i) ** (k - 1) * zero


def cross_checks(n: int, k: int, trend_cap: int = 12) -> CheckReport:
    """Relations between P for one (n, k), plus trends in k up to `trend_cap`."""
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    _check_k(k)
    dist = rank_distribution(n, k)
    p = dist.p
    whole = is_card(n)
    report = CheckReport()

    report.extend([
        compare('total-probability', dist.total(), 1),
        compare('spectral-agreement', p, spectral_distribution(n, k).p),
        compare('rank-reduction', p, tuple(_rank_reduction(n, k, i) for i in range(n + 1))),
        compare('top-rank', p[n], Fraction(factorial(n) ** (k - 1), whole ** k)),
    ])

    sandwich = []
    for i in range(n + 1):
        scale = Fraction(falling(n, i) ** (k - 1), whole ** k)
        sandwich.append((is_card(n - i) ** (k - 1) * scale, p[i], is_card(n - i) ** k * scale))
    report.extend([CheckResult(
        'sandwich', tuple((float(lo), float(x), float(hi)) for lo, x, hi in sandwich), None,
        all(lo <= x <= hi for lo, x, hi in sandwich))])

    decay = [(p[i], Fraction(n - i + 1, n + 1) ** k / falling(n, i)) for i in range(1, n + 1)]
    report.extend([CheckResult(
        'decay-bound', tuple((float(x), float(bound)) for x, bound in decay), None,
        all(x <= bound for x, bound in decay))])

    trend = list(_distributions(n, max(trend_cap, 1)))
    zeros = [d.p[0] for d in trend]
    if n >= 1:
        rising = all(x < y for x, y in zip(zeros, zeros[1:]))
    else:
        rising = all(x == 1 for x in zeros)
    report.extend([
        CheckResult('zero-rank-rising', tuple(float(x) for x in zeros), None, rising),
        info('decay-at-cap', tuple(float(x) for x in trend[-1].p[1:])),
        info('rank-reduction-ratio', tuple(
            float(p[i] / (Fraction(is_card(n - i), whole) ** k * falling(n, i) ** (k - 1)))
            for i in range(n + 1))),
        info('nilpotent-probability', float(prob_of_subset(dist, nilpotent_multiplicities(n)))),
    ])
    return report


@lru_cache(maxsize=8)
def composition_table(n: int) -> np.ndarray:
    """table[i, j] is the enumeration index of unrank(i) * unrank(j)."""
    elements = list(enumerate_elements(n, budget=is_card(n)))
    index = {a: i for i, a in enumerate(elements)}
    size = len(elements)
    logger.info('building the %d x %d composition table of IS_%d', size, size, n)
    table = np.empty((size, size), dtype=np.int64)
    for i, a in enumerate(elements):
        table[i] = [index[compose(a, b)] for b in elements]
    table.setflags(write=False)
    return table


def rank_index(n: int) -> np.ndarray:
    """Rank of every element, by enumeration index."""
    return np.repeat(np.arange(n + 1), [rank_count(n, k) for k in range(n + 1)])


def _fold_exact(table, size, k):
    """The same fold on Python ints, for counts past the int64 range."""
    rows = table.tolist()
    counts = [1] * size
    for _ in range(k - 1):
        step = [0] * size
        for row, c in zip(rows, counts):
            for z in row:
                step[z] += c
        counts = step
    return counts


def brute_force_distribution(n: int, k: int, budget: Optional[int] = None) -> RankDistribution:
    """P counted over every ordered k-tuple of factors.

    Tuples are folded one factor at a time over the composition table, so
    the count per element covers all |IS_n|^k tuples. Raises
    RankConstancyError if two elements of one rank are hit a different
    number of times.

    >>> brute_force_distribution(1, 2).p
    (Fraction(3, 4), Fraction(1, 4))
    """
    _check_k(k)
    budget = config.load().tuple_budget if budget is None else budget
    size = is_card(n)
    required = size ** k
    if required > budget:
        raise BudgetExceeded(required, budget, 'tuples')

    if k > 1 and required >= INT64_LIMIT:
        counts = _fold_exact(composition_table(n), size, k)
    else:
        counts = np.ones(size, dtype=np.int64)
        if k > 1:
            table = composition_table(n)
            for _ in range(k - 1):
                step = np.zeros(size, dtype=np.int64)
                for x in range(size):
                    np.add.at(step, table[:, x], counts)
                counts = step

    p = []
    start = 0
    for i in range(n + 1):
        stop = start + rank_count(n, i)
        hits = counts[start:stop]
        low, high = min(hits), max(hits)
        if low != high:
            raise RankConstancyError(
                f'rank {i} elements of IS_{n} are hit between {low} '
                f'and {high} times by {k}-fold products')
        p.append(Fraction(int(hits[0]), required))
        start = stop
    return RankDistribution(n, k, tuple(p))
