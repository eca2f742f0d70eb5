# pinj
# SPDX-License-Identifier: MIT
"""Finite-n checks of how |T_n|, |IS_n| and the rank counts R_{n,k} grow.

Everything is exact: ratios are Fractions and square-root bounds are compared
after squaring.

>>> growth_report(3).t_ratio
(Fraction(3, 1), Fraction(13, 3))
>>> mod_distribution(3, 2).f
(19, 15)
>>> unimodality_report(3).rank_peak
2
"""
import logging
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Sequence, Tuple

import attr

from pinj.checks import CheckReport, CheckResult, compare, info
from pinj.counting import is_card, is_card_next, lah_number, rank_count, t_card, t_card_next

logger = logging.getLogger(__name__)

# The ratio bound for consecutive rank counts is only claimed past this size.
RATIO_BOUND_MIN_N = 10000


def decreasing_from(ns: Sequence[int], values: Sequence) -> Optional[int]:
    """Smallest n from which `values` is strictly decreasing to the end.

    >>> decreasing_from([1, 2, 3, 4], [1, 3, 2, 1])
    2
    """
    if not values:
        return None
    start = len(values) - 1
    while start > 0 and values[start - 1] > values[start]:
        start -= 1
    return ns[start]


@attr.frozen
class GrowthReport:
    """Growth ratios for n = 2..n_max.

    t8_t and t8_is look one size ahead: |T_{n+1}| / ((n+2)|T_n|).
    """

    n_max: int
    n_range: Tuple[int, ...]
    t_ratio: Tuple[Fraction, ...]
    is_ratio: Tuple[Fraction, ...]
    t8_t: Tuple[Fraction, ...]
    t8_is: Tuple[Fraction, ...]
    t9: Tuple[Fraction, ...]

    def lah_ratio_bounds(self) -> Tuple[bool, ...]:
        """n+1 <= |T_n|/|T_{n-1}| <= 2n-1, strictly once n > 2."""
        flags = []
        for n, r in zip(self.n_range, self.t_ratio):
            if n > 2:
                flags.append(n + 1 < r < 2 * n - 1)
            else:
                flags.append(n + 1 <= r <= 2 * n - 1)
        return tuple(flags)

    def is_ratio_bounds(self) -> Tuple[bool, ...]:
        return tuple(n + 1 < r < 2 * n for n, r in zip(self.n_range, self.is_ratio))

    def next_size_recomputation(self) -> Tuple[bool, ...]:
        return tuple(t_card_next(n) == t_card(n + 1) and is_card_next(n) == is_card(n + 1)
                     for n in self.n_range)

    def t_burn_in(self) -> Optional[int]:
        return decreasing_from(self.n_range, self.t8_t)

    def is_burn_in(self) -> Optional[int]:
        return decreasing_from(self.n_range, self.t8_is)

    def t9_decreasing_from(self) -> Optional[int]:
        return decreasing_from(self.n_range, self.t9)

    def checks(self) -> CheckReport:
        lah, whole, lemma = (self.lah_ratio_bounds(), self.is_ratio_bounds(),
                             self.next_size_recomputation())
        return CheckReport([
            CheckResult('nilpotent-growth-bounds', _failing(self.n_range, lah), None, all(lah)),
            CheckResult('semigroup-growth-bounds', _failing(self.n_range, whole), None, all(whole)),
            CheckResult('next-size-recomputation', _failing(self.n_range, lemma), None, all(lemma)),
            CheckResult('normalised-growth-at-least-one', (float(min(self.t8_t)), float(min(self.t8_is))),
                        None, all(x >= 1 for x in self.t8_t) and all(x > 1 for x in self.t8_is)),
            CheckResult('nilpotent-share-below-one', float(max(self.t9)), None,
                        all(x < 1 for x in self.t9)),
            info('normalised-growth-decreasing-from', {'t': self.t_burn_in(), 'is': self.is_burn_in()}),
            info('nilpotent-share-decreasing-from', self.t9_decreasing_from()),
            info('normalised-growth-at-n-max', (float(self.t8_t[-1]), float(self.t8_is[-1]))),
        ])

    def rows(self):
        flags = zip(self.lah_ratio_bounds(), self.is_ratio_bounds(), self.next_size_recomputation())
        for n, t, s, g_t, g_is, share, (lah, whole, lemma) in zip(
                self.n_range, self.t_ratio, self.is_ratio, self.t8_t, self.t8_is, self.t9, flags):
            yield {
                'n': n,
                't_ratio': float(t),
                'is_ratio': float(s),
                't8_t': float(g_t),
                't8_is': float(g_is),
                't9': float(share),
                'nilpotent_bounds': lah,
                'semigroup_bounds': whole,
                'next_size': lemma,
            }


def _failing(ns, flags):
    """The n at which a flag is False; empty when all hold."""
    return tuple(n for n, ok in zip(ns, flags) if not ok)


def growth_report(n_max: int) -> GrowthReport:
    if n_max < 2:
        raise ValueError(f'n_max must be >= 2, got {n_max}')
    ns = tuple(range(2, n_max + 1))
    logger.debug('growth report for 2 <= n <= %d', n_max)
    return GrowthReport(
        n_max=n_max,
        n_range=ns,
        t_ratio=tuple(Fraction(t_card(n), t_card(n - 1)) for n in ns),
        is_ratio=tuple(Fraction(is_card(n), is_card(n - 1)) for n in ns),
        t8_t=tuple(Fraction(t_card(n + 1), (n + 2) * t_card(n)) for n in ns),
        t8_is=tuple(Fraction(is_card(n + 1), (n + 2) * is_card(n)) for n in ns),
        t9=tuple(Fraction(t_card(n), is_card(n)) for n in ns),
    )


def rank_peak_index(n: int) -> int:
    """k0 = ceil(n + 1/2 - sqrt(n + 5/4)), the rank with the most elements.

    >>> [rank_peak_index(n) for n in (1, 3, 10)]
    [0, 2, 8]
    """
    s = isqrt(4 * n + 5)
    if s * s == 4 * n + 5:
        return (2 * n + 1 - s) // 2
    return (2 * n - s) // 2 + 1


def _lah_threshold_side(n, k):
    """Sign of (k+1)^2 - (n+1): below, on or above sqrt(n+1) - 1."""
    d = (k + 1) ** 2 - (n + 1)
    return (d > 0) - (d < 0)


def _rank_threshold_side(n, k):
    # k < n + 1/2 - sqrt(n + 5/4)  <=>  2n+1-2k > 0 and 4n+5 < (2n+1-2k)^2
    gap = 2 * n + 1 - 2 * k
    if gap > 0 and 4 * n + 5 < gap * gap:
        return -1
    if gap > 0 and 4 * n + 5 == gap * gap:
        return 0
    return 1


def _scan(n, start, first, step, side):
    """Walk a sequence by its exact integer ratio step(k) = (num, den), checking
    that it rises below a threshold and falls above it.

    Returns (rises_below, falls_above, equal_at, peak).
    """
    rises, falls, equal_at = True, True, []
    value, peak, best = first, start, first
    for k in range(start, n):
        num, den = step(k)
        following, rest = divmod(value * num, den)
        assert rest == 0
        where = side(k)
        if k >= 1 and where < 0 and not following > value:
            rises = False
        if k >= 1 and where > 0 and not following < value:
            falls = False
        if following == value:
            equal_at.append(k)
        if following > best:
            peak, best = k + 1, following
        value = following
    return rises, falls, tuple(equal_at), peak


@attr.frozen
class UnimodalityReport:
    n: int
    lah_rises_below: bool
    lah_falls_above: bool
    lah_equal_at: Tuple[int, ...]
    lah_boundary: Optional[int]
    lah_peak: int
    rank_rises_below: bool
    rank_falls_above: bool
    rank_equal_at: Tuple[int, ...]
    rank_peak: int
    k0: int
    window: Tuple[int, ...] = ()
    ratio_bound: Optional[bool] = None
    peak_ratio: Optional[bool] = None

    def checks(self) -> CheckReport:
        report = CheckReport([
            CheckResult('lah-rises-below-threshold', True, None, self.lah_rises_below),
            CheckResult('lah-falls-above-threshold', True, None, self.lah_falls_above),
            compare('lah-peak', self.lah_peak, _lah_peak_index(self.n)),
            info('lah-equal-neighbours', self.lah_equal_at),
            CheckResult('rank-rises-below-threshold', True, None, self.rank_rises_below),
            CheckResult('rank-falls-above-threshold', True, None, self.rank_falls_above),
            compare('rank-peak', self.rank_peak, self.k0),
            info('rank-equal-neighbours', self.rank_equal_at),
        ])
        if self.window:
            report.extend([
                CheckResult('rank-ratio-near-peak', self.window, None, self.ratio_bound),
                CheckResult('rank-peak-dominance', self.window, None, self.peak_ratio),
            ])
        return report


def _lah_peak_index(n):
    # First k >= 1 maximising L'(n, k): ceil(sqrt(n+1)) - 1.
    r = isqrt(n + 1)
    return r - 1 if r * r == n + 1 else r


def _peak_window(n, k0):
    """Ranks k with |k - k0| < n**(1/4)/6 - 1, i.e. (6(|k-k0|+1))**4 < n."""
    ks = []
    d = 0
    while (6 * (d + 1)) ** 4 < n:
        ks.extend([k0 - d, k0 + d] if d else [k0])
        d += 1
    return tuple(sorted(k for k in ks if 0 <= k < n))


def unimodality_report(n: int) -> UnimodalityReport:
    """Where L'(n, k) and R_{n,k} rise and fall in k.

    For n past RATIO_BOUND_MIN_N the consecutive ratio R_{n,k+1}/R_{n,k} is
    also checked to be within n**(-1/4) of 1 near the peak, and the peak to
    stay below twice every R_{n,k} there.
    """
    if n < 2:
        raise ValueError(f'n must be >= 2, got {n}')
    lah = _scan(n, 1, lah_number(n, 1), lambda k: (n - k, k * (k + 1)),
                lambda k: _lah_threshold_side(n, k))
    ranks = _scan(n, 0, 1, lambda k: ((n - k) ** 2, k + 1),
                  lambda k: _rank_threshold_side(n, k))
    r = isqrt(n + 1)
    k0 = rank_peak_index(n)

    window, ratio_bound, peak_ratio = (), None, None
    if n > RATIO_BOUND_MIN_N:
        window = _peak_window(n, k0)
        peak = rank_count(n, k0)
        ratio_bound = all(
            abs(Fraction(rank_count(n, k + 1), rank_count(n, k)) - 1) ** 4 * n < 1
            for k in window)
        peak_ratio = all(Fraction(peak, rank_count(n, k)) < 2 for k in window)
        logger.debug('checked %d ranks near the peak k0=%d of R_%d', len(window), k0, n)

    return UnimodalityReport(
        n=n,
        lah_rises_below=lah[0],
        lah_falls_above=lah[1],
        lah_equal_at=lah[2],
        lah_boundary=r - 1 if r * r == n + 1 else None,
        lah_peak=lah[3],
        rank_rises_below=ranks[0],
        rank_falls_above=ranks[1],
        rank_equal_at=ranks[2],
        rank_peak=ranks[3],
        k0=k0,
        window=window,
        ratio_bound=ratio_bound,
        peak_ratio=peak_ratio,
    )


@attr.frozen
class ModReport:
    n: int
    m: int
    f: Tuple[int, ...]
    proportions: Tuple[Fraction, ...]
    max_deviation_from_uniform: Fraction

    def checks(self) -> CheckReport:
        return CheckReport([
            compare('residues-cover-semigroup', sum(self.f), is_card(self.n)),
            info('max-deviation-from-uniform', float(self.max_deviation_from_uniform)),
        ])

    def rows(self):
        for p, (count, share) in enumerate(zip(self.f, self.proportions)):
            yield {'n': self.n, 'm': self.m, 'residue': p, 'count': count, 'proportion': share}


def mod_distribution(n: int, m: int) -> ModReport:
    """Elements of IS_n grouped by rank modulo m.

    >>> mod_distribution(5, 1).max_deviation_from_uniform
    Fraction(0, 1)
    """
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    if m < 1:
        raise ValueError(f'modulus must be >= 1, got {m}')
    f = [0] * m
    for k in range(n + 1):
        f[k % m] += rank_count(n, k)
    whole = is_card(n)
    proportions = tuple(Fraction(x, whole) for x in f)
    return ModReport(n, m, tuple(f), proportions,
                     max(abs(x - Fraction(1, m)) for x in proportions))


@attr.frozen
class ModTrend:
    m: int
    n_values: Tuple[int, ...]
    deviations: Tuple[Fraction, ...]

    @property
    def decreasing(self) -> bool:
        """Strictly shrinking, or identically zero (m = 1)."""
        if not any(self.deviations):
            return True
        return all(x > y for x, y in zip(self.deviations, self.deviations[1:]))

    def checks(self) -> CheckReport:
        return CheckReport([CheckResult(
            f'mod-{self.m}-deviation-shrinks', tuple(float(x) for x in self.deviations),
            None, self.decreasing)])


def mod_trend(m: int, n_values: Iterable[int]) -> ModTrend:
    """Deviation from uniform over the distinct sizes in `n_values`, smallest first."""
    n_values = tuple(sorted(set(n_values)))
    return ModTrend(m, n_values,
                    tuple(mod_distribution(n, m).max_deviation_from_uniform for n in n_values))
