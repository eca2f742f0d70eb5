# pinj
# SPDX-License-Identifier: MIT
"""Brute-force enumeration of IS_n and the tallies built from it.

Elements come out rank-major, then lexicographically on the map table with
"undefined" sorting before every point. The i-th element produced by
enumerate_elements(n) is unrank(n, i).

>>> [str(a) for a in enumerate_elements(2)]
['[1][2]', '[2,1]', '(2)[1]', '(1)[2]', '[1,2]', '(1)(2)', '(1,2)']
>>> unrank(2, 1) == from_map(2, [None, 1])
True
"""
import logging
from fractions import Fraction
from math import comb, factorial, perm
from typing import Callable, Iterator, List, Optional, Sequence

import attr

from pinj import config
from pinj.counting import CountTable, is_card, rank_count
from pinj.element import (UNDEFINED, PartialInjection, chart_decomposition, from_map,
                          is_idempotent, is_nilpotent, orbit)
from pinj.errors import BudgetExceeded

logger = logging.getLogger(__name__)


@attr.frozen
class ElementFilter:
    """Which rank classes to walk and which of their elements to keep."""

    name: str
    ranks: Callable[[int], Sequence[int]]
    predicate: Optional[Callable[[PartialInjection], bool]] = None

    def required(self, n: int) -> int:
        """Number of elements visited to produce this filter's output."""
        return sum(rank_count(n, k) for k in self.ranks(n))

    def __str__(self):
        return self.name


def _all_ranks(n):
    return range(n + 1)


def _below_full(n):
    # IS_0's only element is nilpotent and has full rank.
    return range(n) if n else range(1)


ALL = ElementFilter('all', _all_ranks)


def of_rank(k: int) -> ElementFilter:
    return ElementFilter(f'rank={k}', lambda n: [k] if 0 <= k <= n else [])


def nilpotent() -> ElementFilter:
    return ElementFilter('nilpotent', _below_full, is_nilpotent)


def nilpotent_with_defect(k: int) -> ElementFilter:
    return ElementFilter(
        f'nilpotent-with-defect={k}',
        lambda n: [n - k] if 0 <= k <= n else [],
        is_nilpotent)


def custom(predicate: Callable[[PartialInjection], bool], name: str = 'custom') -> ElementFilter:
    return ElementFilter(name, _all_ranks, predicate)


def _rank_class(n: int, k: int) -> Iterator[PartialInjection]:
    table: List[Optional[int]] = [UNDEFINED] * n
    used = [False] * (n + 1)

    def fill(pos, remaining):
        if pos == n:
            yield from_map(n, table)
            return
        if n - pos - 1 >= remaining:
            table[pos] = UNDEFINED
            yield from fill(pos + 1, remaining)
        if remaining:
            for v in range(1, n + 1):
                if used[v]:
                    continue
                used[v] = True
                table[pos] = v
                yield from fill(pos + 1, remaining - 1)
                used[v] = False
            table[pos] = UNDEFINED

    return fill(0, k)


def enumerate_elements(n: int, filter: ElementFilter = ALL,
                       budget: Optional[int] = None) -> Iterator[PartialInjection]:
    """Yield every element of IS_n matching `filter`, each exactly once.

    Raises BudgetExceeded up front when the walk would visit more elements
    than `budget` (the configured enumeration budget by default).
    """
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    budget = config.load().enumeration_budget if budget is None else budget
    required = filter.required(n)
    if required > budget:
        raise BudgetExceeded(required, budget)
    logger.debug('enumerating %s of IS_%d: %d elements to visit', filter, n, required)
    return _walk(n, filter)


def _walk(n, filter):
    for k in filter.ranks(n):
        for a in _rank_class(n, k):
            if filter.predicate is None or filter.predicate(a):
                yield a


def _completions(after, free, remaining):
    """(ways with this slot undefined, ways per choice of value for it)."""
    undefined = comb(after, remaining) * perm(free, remaining)
    each = comb(after, remaining - 1) * perm(free - 1, remaining - 1) if remaining else 0
    return undefined, each


def unrank(n: int, index: int) -> PartialInjection:
    """The element at position `index` of the enumeration order of IS_n."""
    if not 0 <= index < is_card(n):
        raise IndexError(f'index {index} is outside [0, {is_card(n)})')
    k = 0
    while index >= rank_count(n, k):
        index -= rank_count(n, k)
        k += 1

    free = list(range(1, n + 1))
    table = []
    remaining = k
    for pos in range(n):
        undefined, each = _completions(n - pos - 1, len(free), remaining)
        if index < undefined:
            table.append(UNDEFINED)
            continue
        index -= undefined
        j, index = divmod(index, each)
        table.append(free.pop(j))
        remaining -= 1
    return from_map(n, table)


def rank_of(a: PartialInjection) -> int:
    """Position of `a` in the enumeration order; inverse of unrank.

    >>> rank_of(from_map(3, [3, 2, 1])) == is_card(3) - 1
    True
    """
    n = a.n
    index = sum(rank_count(n, k) for k in range(a.rank))
    free = list(range(1, n + 1))
    remaining = a.rank
    for pos, v in enumerate(a.table):
        undefined, each = _completions(n - pos - 1, len(free), remaining)
        if v is UNDEFINED:
            continue
        j = free.index(v)
        index += undefined + j * each
        free.pop(j)
        remaining -= 1
    return index


@attr.define
class Tally:
    """Counts taken element by element; the enumerated side of every check.

    Tallies over disjoint pieces of IS_n add up with `+`.
    """

    n: int
    card_is: int = 0
    card_t: int = 0
    r: List[int] = None
    lah: List[int] = None
    st: List[int] = None
    chains_total: int = 0
    chains_total_nilpotent: int = 0
    chains_by_length: List[int] = None
    cycles_by_length: List[int] = None
    fixed_points_total: int = 0
    orbit_counts: List[int] = None
    orbit_counts_nilpotent: List[int] = None
    idempotents: int = 0
    components_total: int = 0
    stable_rank_total: int = 0
    one_in_dom: int = 0
    one_in_image: int = 0
    one_and_two_in_dom: int = 0
    nilpotent_one_isolated: int = 0

    def __attrs_post_init__(self):
        for name in ('r', 'lah', 'st', 'chains_by_length', 'cycles_by_length',
                     'orbit_counts', 'orbit_counts_nilpotent'):
            if getattr(self, name) is None:
                setattr(self, name, [0] * (self.n + 1))

    def add(self, a: PartialInjection):
        n = self.n
        chart = chart_decomposition(a)
        stable = sum(len(c) for c in chart.cycles)
        length = orbit(a, 1).length if n else 0

        self.card_is += 1
        self.r[a.rank] += 1
        self.st[stable] += 1
        self.stable_rank_total += stable
        self.chains_total += len(chart.chains)
        for c in chart.chains:
            self.chains_by_length[len(c)] += 1
        for c in chart.cycles:
            self.cycles_by_length[len(c)] += 1
            if len(c) == 1:
                self.fixed_points_total += 1
        self.components_total += len(chart.cycles) + len(chart.chains)
        self.orbit_counts[length] += 1

        if not chart.cycles:
            self.card_t += 1
            self.lah[n - a.rank] += 1
            self.chains_total_nilpotent += len(chart.chains)
            self.orbit_counts_nilpotent[length] += 1
            if n >= 1 and chart.chains[0] == (1,):
                self.nilpotent_one_isolated += 1
        if is_idempotent(a):
            self.idempotents += 1
        if n >= 1 and a.table[0] is not UNDEFINED:
            self.one_in_dom += 1
            if n >= 2 and a.table[1] is not UNDEFINED:
                self.one_and_two_in_dom += 1
        if n >= 1 and 1 in a.image:
            self.one_in_image += 1

    def __add__(self, other: 'Tally') -> 'Tally':
        if self.n != other.n:
            raise ValueError(f'cannot merge tallies of IS_{self.n} and IS_{other.n}')
        merged = Tally(self.n)
        for field in attr.fields(Tally):
            if field.name == 'n':
                continue
            mine, theirs = getattr(self, field.name), getattr(other, field.name)
            if isinstance(mine, list):
                setattr(merged, field.name, [x + y for x, y in zip(mine, theirs)])
            else:
                setattr(merged, field.name, mine + theirs)
        return merged

    def as_count_table(self) -> CountTable:
        """The tally in CountTable form, comparable field by field."""
        n = self.n
        return CountTable(
            n=n,
            card_is=self.card_is,
            card_t=self.card_t,
            r=tuple(self.r),
            d=tuple(reversed(self.r)),
            lah=tuple(self.lah),
            st=tuple(self.st),
            chains_total=self.chains_total,
            chains_total_nilpotent=self.chains_total_nilpotent,
            chains_by_length=tuple(self.chains_by_length),
            cycles_by_length=tuple(self.cycles_by_length),
            fixed_points_total=self.fixed_points_total,
            orbit_counts=tuple(self.orbit_counts),
            orbit_counts_nilpotent=tuple(self.orbit_counts_nilpotent),
            idempotents=self.idempotents,
            b=Fraction(self.card_is, factorial(n)),
            c_avg=Fraction(self.components_total, self.card_is) if self.card_is else Fraction(0),
        )


def tally(n: int, filter: ElementFilter = ALL, budget: Optional[int] = None) -> Tally:
    result = Tally(n)
    for a in enumerate_elements(n, filter, budget):
        result.add(a)
    logger.debug('tallied %d elements of IS_%d', result.card_is, n)
    return result
