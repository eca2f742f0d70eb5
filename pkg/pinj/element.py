# pinj
# SPDX-License-Identifier: MIT
"""Partial injections of {1..n} and their chart anatomy.

A PartialInjection stores its map table, entry x-1 holding the image of x or
None where x is undefined. Points are 1-based everywhere.

Products are read left to right: (a * b)(x) = b(a(x)).

>>> a = from_pairs(10, [(1, 7), (2, 4), (3, 5), (4, 1), (5, 10), (7, 2), (9, 6)])
>>> str(a)
'(1,7,2,4)[3,5,10][9,6][8]'
>>> a.rank, a.defect
(7, 3)
>>> str(inverse(a))
'(1,4,2,7)[10,5,3][6,9][8]'
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Optional, Sequence, Tuple

import attr

from pinj.errors import (DuplicateDomainPoint, DuplicateImagePoint,
                         MissingPoint, PointOutOfRange, RepeatedPoint,
                         SizeMismatch)

UNDEFINED = None

Table = Tuple[Optional[int], ...]


def _check_table(instance, attribute, table):
    n = instance.n
    if n < 0:
        raise ValueError(f'ground set size must be >= 0, got {n}')
    if len(table) != n:
        raise ValueError(f'map table has {len(table)} entries, expected {n}')
    seen = set()
    for v in table:
        if v is UNDEFINED:
            continue
        if not 1 <= v <= n:
            raise PointOutOfRange(v, n)
        if v in seen:
            raise DuplicateImagePoint(v)
        seen.add(v)


@attr.frozen(repr=False)
class PartialInjection:
    """An element of IS_n.

    Construct through from_pairs/from_map/parse_chart rather than directly if
    the table comes from outside; the constructor validates either way.

    >>> a = from_map(3, [2, None, 1])
    >>> a(1), a(2), a(3)
    (2, None, 1)
    >>> a.domain, a.image
    (frozenset({1, 3}), frozenset({1, 2}))
    """

    n: int
    table: Table = attr.field(converter=tuple, validator=_check_table)

    def __call__(self, x: int) -> Optional[int]:
        if not 1 <= x <= self.n:
            raise PointOutOfRange(x, self.n)
        return self.table[x - 1]

    def __mul__(self, other: PartialInjection) -> PartialInjection:
        return compose(self, other)

    def __str__(self):
        return str(chart_decomposition(self))

    def __repr__(self):
        return f"PartialInjection(n={self.n}, '{self}')"

    @property
    def rank(self) -> int:
        return sum(1 for v in self.table if v is not UNDEFINED)

    @property
    def defect(self) -> int:
        return self.n - self.rank

    @property
    def domain(self) -> frozenset:
        return frozenset(x for x, v in enumerate(self.table, 1) if v is not UNDEFINED)

    @property
    def image(self) -> frozenset:
        return frozenset(v for v in self.table if v is not UNDEFINED)

    def pairs(self):
        return [(x, v) for x, v in enumerate(self.table, 1) if v is not UNDEFINED]

    def sort_key(self):
        """Rank-major, then lexicographic on the table, undefined first."""
        return (self.rank, tuple(0 if v is UNDEFINED else v for v in self.table))


@attr.frozen
class ChartDecomposition:
    """Cycles and chains of the action graph, in canonical order.

    Cycles start at their minimum and are sorted by it; chains are written
    source first and sorted by their minimum point.

    >>> str(ChartDecomposition(cycles=((1, 2),), chains=((3,),)))
    '(1,2)[3]'
    """

    cycles: Tuple[Tuple[int, ...], ...] = ()
    chains: Tuple[Tuple[int, ...], ...] = ()

    def __str__(self):
        parts = ['(' + ','.join(map(str, c)) + ')' for c in self.cycles]
        parts += ['[' + ','.join(map(str, c)) + ']' for c in self.chains]
        return ''.join(parts)

    def points(self):
        for component in self.cycles + self.chains:
            yield from component


@attr.frozen
class ChainType:
    """(c_1..c_n, d_1..d_n): cycles and chains counted by length.

    >>> chain_type(from_pairs(5, [(1, 2), (2, 3), (4, 5)])).chain_counts
    (0, 1, 1, 0, 0)
    """

    cycle_counts: Tuple[int, ...]
    chain_counts: Tuple[int, ...]


class Terminal:
    LEAVES_DOMAIN = 'leaves domain'
    REENTERS_CYCLE = 're-enters cycle at start'


@attr.frozen
class OrbitTrace:
    start: int
    points: Tuple[int, ...]
    terminal: str

    @property
    def length(self) -> int:
        return len(self.points)


@attr.frozen
class Profile:
    rank: int
    defect: int
    stable_rank: int
    is_nilpotent: bool
    nilpotency_index: int
    fixed_point_count: int
    chain_type: ChainType


# Constructors


def from_map(n: int, table: Sequence[Optional[int]]) -> PartialInjection:
    return PartialInjection(n, tuple(table))


def from_pairs(n: int, pairs: Iterable[Tuple[int, int]]) -> PartialInjection:
    """Build the element whose graph is exactly `pairs`.

    >>> str(from_pairs(2, [(1, 2)]))
    '[1,2]'
    >>> from_pairs(2, [(1, 1), (2, 1)])
    Traceback (most recent call last):
        ...
    pinj.errors.DuplicateImagePoint: point 1 is hit more than once
    """
    if n < 0:
        raise ValueError(f'ground set size must be >= 0, got {n}')
    table = [UNDEFINED] * n
    for x, y in pairs:
        for p in (x, y):
            if not 1 <= p <= n:
                raise PointOutOfRange(p, n)
        if table[x - 1] is not UNDEFINED:
            raise DuplicateDomainPoint(x)
        table[x - 1] = y
    return PartialInjection(n, tuple(table))


def identity(n: int) -> PartialInjection:
    return PartialInjection(n, tuple(range(1, n + 1)))


def zero(n: int) -> PartialInjection:
    return PartialInjection(n, (UNDEFINED,) * n)


def from_chart(decomposition: ChartDecomposition, n: int) -> PartialInjection:
    """Rebuild an element from its cycles and chains.

    Components may be in any rotation or order; every point of {1..n} must
    appear exactly once.
    """
    seen = set()
    for p in decomposition.points():
        if not 1 <= p <= n:
            raise PointOutOfRange(p, n)
        if p in seen:
            raise RepeatedPoint(p)
        seen.add(p)
    if len(seen) != n:
        raise MissingPoint(set(range(1, n + 1)) - seen)

    table = [UNDEFINED] * n
    for cycle in decomposition.cycles:
        for i, p in enumerate(cycle):
            table[p - 1] = cycle[(i + 1) % len(cycle)]
    for chain in decomposition.chains:
        for p, q in zip(chain, chain[1:]):
            table[p - 1] = q
    return PartialInjection(n, tuple(table))


# Algebra


def compose(a: PartialInjection, b: PartialInjection) -> PartialInjection:
    """a * b: apply a first, then b.

    >>> str(compose(from_pairs(2, [(1, 2)]), from_pairs(2, [(2, 1)])))
    '(1)[2]'
    """
    if a.n != b.n:
        raise SizeMismatch(a.n, b.n)
    bt = b.table
    return PartialInjection(a.n, tuple(
        UNDEFINED if v is UNDEFINED else bt[v - 1] for v in a.table))


def inverse(a: PartialInjection) -> PartialInjection:
    table = [UNDEFINED] * a.n
    for x, v in a.pairs():
        table[v - 1] = x
    return PartialInjection(a.n, tuple(table))


def power(a: PartialInjection, k: int) -> PartialInjection:
    """a**k by repeated squaring; a**0 is the identity.

    >>> str(power(from_pairs(2, [(1, 2)]), 2))
    '[1][2]'
    """
    if k < 0:
        raise ValueError(f'exponent must be >= 0, got {k}')
    result = identity(a.n)
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(a: PartialInjection, x: int, y: int) -> PartialInjection:
    """Conjugate a by the transposition (x, y)."""
    for p in (x, y):
        if not 1 <= p <= a.n:
            raise PointOutOfRange(p, a.n)

    def swap(p):
        return y if p == x else x if p == y else p

    return from_pairs(a.n, [(swap(p), swap(q)) for p, q in a.pairs()])


def restrict(a: PartialInjection, points: Iterable[int]) -> PartialInjection:
    """The restriction of a to `points` (still an element of IS_n)."""
    keep = set(points)
    return PartialInjection(a.n, tuple(
        v if x in keep else UNDEFINED for x, v in enumerate(a.table, 1)))


def is_idempotent(a: PartialInjection) -> bool:
    return all(v is UNDEFINED or v == x for x, v in enumerate(a.table, 1))


# Anatomy


def chart_decomposition(a: PartialInjection) -> ChartDecomposition:
    """Canonical chart of a.

    >>> chart_decomposition(zero(3))
    ChartDecomposition(cycles=(), chains=((1,), (2,), (3,)))
    >>> chart_decomposition(identity(3))
    ChartDecomposition(cycles=((1,), (2,), (3,)), chains=())
    """
    table = a.table
    image = set(v for v in table if v is not UNDEFINED)
    visited = [False] * (a.n + 1)

    chains = []
    for source in range(1, a.n + 1):
        if source in image:
            continue
        chain = []
        p = source
        while p is not UNDEFINED:
            visited[p] = True
            chain.append(p)
            p = table[p - 1]
        chains.append(tuple(chain))
    chains.sort(key=min)

    # Every point left over lies on a cycle; scanning upwards starts each
    # cycle at its minimum.
    cycles = []
    for start in range(1, a.n + 1):
        if visited[start]:
            continue
        cycle = []
        p = start
        while not visited[p]:
            visited[p] = True
            cycle.append(p)
            p = table[p - 1]
        cycles.append(tuple(cycle))

    return ChartDecomposition(cycles=tuple(cycles), chains=tuple(chains))


def chain_type(a: PartialInjection) -> ChainType:
    chart = chart_decomposition(a)
    cycles = Counter(len(c) for c in chart.cycles)
    chains = Counter(len(c) for c in chart.chains)
    return ChainType(
        cycle_counts=tuple(cycles[i] for i in range(1, a.n + 1)),
        chain_counts=tuple(chains[i] for i in range(1, a.n + 1)))


def stable_rank(a: PartialInjection) -> int:
    return sum(len(c) for c in chart_decomposition(a).cycles)


def permutational_part(a: PartialInjection) -> PartialInjection:
    chart = chart_decomposition(a)
    return restrict(a, (p for c in chart.cycles for p in c))


def is_nilpotent(a: PartialInjection) -> bool:
    return not chart_decomposition(a).cycles


def profile(a: PartialInjection) -> Profile:
    """Numeric summary of a.

    >>> p = profile(zero(4))
    >>> p.rank, p.defect, p.stable_rank, p.is_nilpotent, p.nilpotency_index
    (0, 4, 0, True, 1)
    """
    chart = chart_decomposition(a)
    nilpotent = not chart.cycles
    cycles = Counter(len(c) for c in chart.cycles)
    chains = Counter(len(c) for c in chart.chains)
    rank = a.rank
    return Profile(
        rank=rank,
        defect=a.n - rank,
        stable_rank=sum(len(c) for c in chart.cycles),
        is_nilpotent=nilpotent,
        # IS_0 has no chains; its zero still satisfies 0**1 = 0.
        nilpotency_index=max((len(c) for c in chart.chains), default=1) if nilpotent else 0,
        fixed_point_count=cycles[1],
        chain_type=ChainType(
            cycle_counts=tuple(cycles[i] for i in range(1, a.n + 1)),
            chain_counts=tuple(chains[i] for i in range(1, a.n + 1))))


def orbit(a: PartialInjection, x: int) -> OrbitTrace:
    """The orbit {x, a(x), a^2(x), ...}; empty when x is not in dom(a).

    >>> orbit(from_pairs(3, [(1, 2), (2, 3)]), 1).points
    (1, 2, 3)
    >>> orbit(zero(3), 1).length
    0
    """
    if not 1 <= x <= a.n:
        raise PointOutOfRange(x, a.n)
    if a.table[x - 1] is UNDEFINED:
        return OrbitTrace(start=x, points=(), terminal=Terminal.LEAVES_DOMAIN)
    points = [x]
    p = a.table[x - 1]
    while p is not UNDEFINED and p != x:
        points.append(p)
        p = a.table[p - 1]
    terminal = Terminal.REENTERS_CYCLE if p == x else Terminal.LEAVES_DOMAIN
    return OrbitTrace(start=x, points=tuple(points), terminal=terminal)

