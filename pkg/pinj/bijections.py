# pinj
# SPDX-License-Identifier: MIT
"""Forward and backward maps between marked elements.

Each map turns a marked element (an element plus a point, a pair of points, a
chain or a point on a cycle) into another marked element, and has an exact
inverse. `sweep` runs a map over its whole domain and codomain for one n.

>>> from pinj.element import from_pairs
>>> a = from_pairs(2, [(1, 2)])
>>> b = lah_defect_forward(MarkedElement(a, PointMark(1)))
>>> str(b.element), b.mark
('(2)[1]', ChainMark(index=0))
>>> lah_defect_backward(b) == MarkedElement(a, PointMark(1))
True
"""
import logging
from typing import Callable, Iterator, Optional, Tuple

import attr

from pinj.checks import CheckReport, CheckResult
from pinj.counting import (chains_total, defect_count, fixed_points_total, is_card, lah_number,
                           nilpotent_chains_total, orbit_count, stable_rank_count)
from pinj.element import (UNDEFINED, ChartDecomposition, PartialInjection, chart_decomposition,
                          from_chart, from_map, is_nilpotent, orbit)
from pinj.enumeration import ALL, enumerate_elements, nilpotent, nilpotent_with_defect, of_rank
from pinj.errors import InvalidMark, NotNilpotent, PointOutOfRange

logger = logging.getLogger(__name__)


@attr.frozen
class PointMark:
    KIND = 'point'
    x: int


@attr.frozen
class PointPairMark:
    KIND = 'point_pair'
    y: int
    z: int


@attr.frozen
class ChainMark:
    """A chain, by its position in the canonical chart."""
    KIND = 'chain'
    index: int


@attr.frozen
class CycleMark:
    """A cycle, by its position in the canonical chart, with a base point on it."""
    KIND = 'cycle_point'
    index: int
    base: int


@attr.frozen
class MarkedElement:
    element: PartialInjection
    mark: object


# Chart surgery


def _parts(a: PartialInjection):
    chart = chart_decomposition(a)
    return list(chart.cycles), list(chart.chains)


def _assemble(n: int, cycles, chains) -> PartialInjection:
    return from_chart(ChartDecomposition(
        cycles=tuple(tuple(c) for c in cycles),
        chains=tuple(tuple(c) for c in chains)), n)


def _rotate(cycle, start):
    i = cycle.index(start)
    return tuple(cycle[i:]) + tuple(cycle[:i])


def _with_chain(a: PartialInjection, chain) -> MarkedElement:
    chains = chart_decomposition(a).chains
    return MarkedElement(a, ChainMark(chains.index(tuple(chain))))


def _with_cycle(a: PartialInjection, cycle, base) -> MarkedElement:
    cycles = chart_decomposition(a).cycles
    return MarkedElement(a, CycleMark(cycles.index(_rotate(cycle, min(cycle))), base))


def _expect(m: MarkedElement, kind):
    if not isinstance(m.mark, kind):
        raise InvalidMark(f'expected a {kind.KIND} mark, got {m.mark!r}')
    return m.mark


def _marked_chain(m: MarkedElement):
    mark = _expect(m, ChainMark)
    chains = chart_decomposition(m.element).chains
    if not 0 <= mark.index < len(chains):
        raise InvalidMark(f'{m.element} has no chain number {mark.index}')
    return chains[mark.index]


def _marked_point(m: MarkedElement) -> int:
    x = _expect(m, PointMark).x
    if not 1 <= x <= m.element.n:
        raise InvalidMark(str(PointOutOfRange(x, m.element.n)))
    return x


def _find(components, x):
    for i, c in enumerate(components):
        if x in c:
            return i
    return None


# Nilpotent with a point <-> element of the same defect with a chain


def lah_defect_forward(m: MarkedElement) -> MarkedElement:
    """The points after x in its orbit are permuted into cycles: the i-th of
    them is sent to the i-th smallest. x is cut off and ends its chain."""
    alpha = m.element
    x = _marked_point(m)
    if not is_nilpotent(alpha):
        raise NotNilpotent(f'{alpha} has cycles')
    after = orbit(alpha, x).points[1:]
    table = list(alpha.table)
    if after:
        table[x - 1] = UNDEFINED
        for p, t in zip(after, sorted(after)):
            table[p - 1] = t
    beta = from_map(alpha.n, table)
    return MarkedElement(beta, ChainMark(_find(chart_decomposition(beta).chains, x)))


def lah_defect_backward(m: MarkedElement) -> MarkedElement:
    beta = m.element
    chain = _marked_chain(m)
    x = chain[-1]
    cyclic = sorted(p for c in chart_decomposition(beta).cycles for p in c)
    table = list(beta.table)
    if cyclic:
        inverse = {v: p for p, v in beta.pairs()}
        u = [inverse[t] for t in cyclic]
        table[x - 1] = u[0]
        for p, q in zip(u, u[1:]):
            table[p - 1] = q
        table[u[-1] - 1] = UNDEFINED
    return MarkedElement(from_map(beta.n, table), PointMark(x))


# A point on a cycle <-> a chain


def cycle_chain_forward(m: MarkedElement) -> MarkedElement:
    """Open the marked cycle at its base point into a chain."""
    alpha = m.element
    mark = _expect(m, CycleMark)
    cycles, chains = _parts(alpha)
    if not 0 <= mark.index < len(cycles) or mark.base not in cycles[mark.index]:
        raise InvalidMark(f'{alpha} has no cycle number {mark.index} through {mark.base}')
    chain = _rotate(cycles.pop(mark.index), mark.base)
    beta = _assemble(alpha.n, cycles, chains + [chain])
    return _with_chain(beta, chain)


def cycle_chain_backward(m: MarkedElement) -> MarkedElement:
    beta = m.element
    chain = _marked_chain(m)
    cycles, chains = _parts(beta)
    chains.remove(chain)
    alpha = _assemble(beta.n, cycles + [chain], chains)
    return _with_cycle(alpha, chain, chain[0])


# (element, point) <-> (element, chain) or (element, fixed point, point)


def fixed_point_chain_forward(m: MarkedElement) -> MarkedElement:
    """x on a chain: x becomes a fixed point, marked with a neighbour."""
    alpha = m.element
    x = _marked_point(m)
    cycles, chains = _parts(alpha)
    i = _find(chains, x)
    if i is None:
        raise InvalidMark(f'{x} is not on a chain of {alpha}')
    chain = chains.pop(i)
    pos = chain.index(x)
    if len(chain) == 1:
        z = x
    elif pos == 0:
        z = chain[1]
        cycles.append(chain[1:])
    else:
        z = chain[pos - 1]
        chains.append(chain[:pos] + chain[pos + 1:])
    cycles.append((x,))
    return MarkedElement(_assemble(alpha.n, cycles, chains), PointPairMark(x, z))


def fixed_point_chain_backward(m: MarkedElement) -> MarkedElement:
    gamma = m.element
    mark = _expect(m, PointPairMark)
    y, z = mark.y, mark.z
    if not 1 <= z <= gamma.n or not 1 <= y <= gamma.n or gamma(y) != y:
        raise InvalidMark(f'{y} is not a fixed point of {gamma}')
    cycles, chains = _parts(gamma)
    cycles.remove((y,))
    if y == z:
        chains.append((y,))
    elif _find(chains, z) is not None:
        chain = chains.pop(_find(chains, z))
        pos = chain.index(z)
        chains.append(chain[:pos + 1] + (y,) + chain[pos + 1:])
    else:
        cycle = cycles.pop(_find(cycles, z))
        chains.append((y,) + _rotate(cycle, z))
    return MarkedElement(_assemble(gamma.n, cycles, chains), PointMark(y))


def fixed_point_cycle_forward(m: MarkedElement) -> MarkedElement:
    """x on a cycle: open the cycle at x."""
    alpha = m.element
    x = _marked_point(m)
    cycles = chart_decomposition(alpha).cycles
    i = _find(cycles, x)
    if i is None:
        raise InvalidMark(f'{x} is not on a cycle of {alpha}')
    return cycle_chain_forward(MarkedElement(alpha, CycleMark(i, x)))


def fixed_point_cycle_backward(m: MarkedElement) -> MarkedElement:
    alpha_marked = cycle_chain_backward(m)
    return MarkedElement(alpha_marked.element, PointMark(alpha_marked.mark.base))


def fixed_point_forward(m: MarkedElement) -> MarkedElement:
    x = _marked_point(m)
    if _find(chart_decomposition(m.element).cycles, x) is None:
        return fixed_point_chain_forward(m)
    return fixed_point_cycle_forward(m)


def fixed_point_backward(m: MarkedElement) -> MarkedElement:
    if isinstance(m.mark, ChainMark):
        return fixed_point_cycle_backward(m)
    return fixed_point_chain_backward(m)


# A point in the orbit of 1 <-> a chain


def orbit_chain_forward(m: MarkedElement) -> MarkedElement:
    alpha = m.element
    x = _marked_point(m)
    if x not in orbit(alpha, 1).points:
        raise InvalidMark(f'{x} is not in the orbit of 1 under {alpha}')
    cycles, chains = _parts(alpha)

    i = _find(cycles, 1)
    if i is not None:
        l = _rotate(cycles.pop(i), x)
        chains.append(l)
        return _with_chain(_assemble(alpha.n, cycles, chains), l)

    chain = chains.pop(_find(chains, 1))
    if x == 1:
        one = chain.index(1)
        cycles.append(chain[:one + 1])
        l = chain[one + 1:]
        chains.append(l)
    else:
        pos = chain.index(x)
        l = chain[pos:]
        chains.extend([chain[:pos], l])
    return _with_chain(_assemble(alpha.n, cycles, chains), l)


def orbit_chain_backward(m: MarkedElement) -> MarkedElement:
    beta = m.element
    l = _marked_chain(m)
    cycles, chains = _parts(beta)
    chains.remove(l)

    if 1 in l:
        cycles.append(l)
        x = l[0]
    elif _find(chains, 1) is not None:
        head = chains.pop(_find(chains, 1))
        chains.append(head + l)
        x = l[0]
    else:
        cycle = cycles.pop(_find(cycles, 1))
        # rotate so the cycle ends at 1
        head = _rotate(cycle, beta(1))
        chains.append(head + l)
        x = 1
    return MarkedElement(_assemble(beta.n, cycles, chains), PointMark(x))


# Isolated point with an element on the rest <-> nilpotent with a chain


def permpart_chain_forward(m: MarkedElement) -> MarkedElement:
    """The permutational part, read off along its sorted domain, becomes one
    chain ending at the isolated point."""
    alpha = m.element
    x = _marked_point(m)
    if alpha(x) is not UNDEFINED or x in alpha.image:
        raise InvalidMark(f'{x} is not isolated in {alpha}')
    cycles, chains = _parts(alpha)
    cyclic = sorted(p for c in cycles for p in c)
    l = tuple(alpha(a) for a in cyclic) + (x,)
    chains.remove((x,))
    return _with_chain(_assemble(alpha.n, [], chains + [l]), l)


def permpart_chain_backward(m: MarkedElement) -> MarkedElement:
    beta = m.element
    if not is_nilpotent(beta):
        raise NotNilpotent(f'{beta} has cycles')
    l = _marked_chain(m)
    x, images = l[-1], l[:-1]
    table = list(beta.table)
    for p in l:
        table[p - 1] = UNDEFINED
    for a, c in zip(sorted(images), images):
        table[a - 1] = c
    return MarkedElement(from_map(beta.n, table), PointMark(x))


# Domains and codomains


def _with_points(n, elements):
    for a in elements:
        for x in range(1, n + 1):
            yield MarkedElement(a, PointMark(x))


def _with_chains(elements):
    for a in elements:
        for i in range(len(chart_decomposition(a).chains)):
            yield MarkedElement(a, ChainMark(i))


def _nilpotents(n, k, budget):
    if k is None:
        return enumerate_elements(n, nilpotent(), budget)
    return enumerate_elements(n, nilpotent_with_defect(k), budget)


def _of_defect(n, k, budget):
    if k is None:
        return (a for a in enumerate_elements(n, ALL, budget) if a.rank < n)
    return enumerate_elements(n, of_rank(n - k), budget)


def _lah_domain(n, k, budget):
    return _with_points(n, _nilpotents(n, k, budget))


def _lah_codomain(n, k, budget):
    return _with_chains(_of_defect(n, k, budget))


def _lah_sizes(n, k):
    ks = range(1, n + 1) if k is None else [k]
    return (sum(n * lah_number(n, j) for j in ks), sum(j * defect_count(n, j) for j in ks))


def _cycle_points(n, k, budget):
    for a in enumerate_elements(n, ALL, budget):
        for i, c in enumerate(chart_decomposition(a).cycles):
            for base in c:
                yield MarkedElement(a, CycleMark(i, base))


def _all_chains(n, k, budget):
    return _with_chains(enumerate_elements(n, ALL, budget))


def _cycle_chain_sizes(n, k):
    return sum(j * stable_rank_count(n, j) for j in range(n + 1)), chains_total(n)


def _all_points(n, k, budget):
    return _with_points(n, enumerate_elements(n, ALL, budget))


def _chain_points(n, k, budget):
    return (m for m in _all_points(n, k, budget)
            if _find(chart_decomposition(m.element).cycles, m.mark.x) is None)


def _cycle_points_only(n, k, budget):
    return (m for m in _all_points(n, k, budget)
            if _find(chart_decomposition(m.element).cycles, m.mark.x) is not None)


def _fixed_point_pairs(n, k, budget):
    for a in enumerate_elements(n, ALL, budget):
        for y in range(1, n + 1):
            if a(y) == y:
                for z in range(1, n + 1):
                    yield MarkedElement(a, PointPairMark(y, z))


def _chains_or_pairs(n, k, budget):
    yield from _all_chains(n, k, budget)
    yield from _fixed_point_pairs(n, k, budget)


def _fixed_point_sizes(n, k):
    return n * is_card(n), chains_total(n) + n * fixed_points_total(n)


def _chain_point_sizes(n, k):
    # points on chains are the points outside the permutational parts
    on_chains = n * is_card(n) - sum(j * stable_rank_count(n, j) for j in range(n + 1))
    return on_chains, n * fixed_points_total(n)


def _orbit_points(n, k, budget):
    for a in enumerate_elements(n, ALL, budget):
        for x in (orbit(a, 1).points if n else ()):
            yield MarkedElement(a, PointMark(x))


def _orbit_sizes(n, k):
    return sum(j * orbit_count(n, j) for j in range(n + 1)), chains_total(n)


def _isolated_pairs(n, k, budget):
    m = n + 1
    elements = list(enumerate_elements(n, ALL, budget))
    for x in range(1, m + 1):
        others = [p for p in range(1, m + 1) if p != x]
        for a in elements:
            table = [UNDEFINED] * m
            for i, v in enumerate(a.table):
                if v is not UNDEFINED:
                    table[others[i] - 1] = others[v - 1]
            yield MarkedElement(from_map(m, table), PointMark(x))


def _nilpotent_chains_above(n, k, budget):
    return _with_chains(enumerate_elements(n + 1, nilpotent(), budget))


def _permpart_sizes(n, k):
    return (n + 1) * is_card(n), nilpotent_chains_total(n + 1)


@attr.frozen
class Bijection:
    name: str
    forward: Callable[[MarkedElement], MarkedElement]
    backward: Callable[[MarkedElement], MarkedElement]
    domain: Callable[[int, Optional[int], Optional[int]], Iterator[MarkedElement]]
    codomain: Callable[[int, Optional[int], Optional[int]], Iterator[MarkedElement]]
    sizes: Callable[[int, Optional[int]], Tuple[int, int]]
    minimum_n: int = 0
    takes_k: bool = False


lah_defect_map = Bijection(
    'lah_defect_map', lah_defect_forward, lah_defect_backward,
    _lah_domain, _lah_codomain, _lah_sizes, minimum_n=1, takes_k=True)

cycle_chain_map = Bijection(
    'cycle_chain_map', cycle_chain_forward, cycle_chain_backward,
    _cycle_points, _all_chains, _cycle_chain_sizes)

fixed_point_maps = Bijection(
    'fixed_point_maps', fixed_point_forward, fixed_point_backward,
    _all_points, _chains_or_pairs, _fixed_point_sizes)

fixed_point_chain_map = Bijection(
    'fixed_point_maps/chain-points', fixed_point_chain_forward, fixed_point_chain_backward,
    _chain_points, _fixed_point_pairs, _chain_point_sizes)

fixed_point_cycle_map = Bijection(
    'fixed_point_maps/cycle-points', fixed_point_cycle_forward, fixed_point_cycle_backward,
    _cycle_points_only, _all_chains, _cycle_chain_sizes)

orbit_chain_map = Bijection(
    'orbit_chain_map', orbit_chain_forward, orbit_chain_backward,
    _orbit_points, _all_chains, _orbit_sizes, minimum_n=1)

permpart_chain_map = Bijection(
    'permpart_chain_map', permpart_chain_forward, permpart_chain_backward,
    _isolated_pairs, _nilpotent_chains_above, _permpart_sizes)

BIJECTIONS = {b.name: b for b in [
    lah_defect_map,
    cycle_chain_map,
    fixed_point_maps,
    fixed_point_chain_map,
    fixed_point_cycle_map,
    orbit_chain_map,
    permpart_chain_map,
]}


@attr.frozen
class SweepReport:
    name: str
    n: int
    k: Optional[int]
    domain_size: int
    codomain_size: int
    expected_sizes: Tuple[int, int]
    round_trip_failures: int
    inverse_round_trip_failures: int
    images_match_codomain: bool
    injective: bool

    @property
    def passed(self) -> bool:
        return (self.round_trip_failures == 0
                and self.inverse_round_trip_failures == 0
                and self.images_match_codomain
                and self.injective
                and (self.domain_size, self.codomain_size) == self.expected_sizes)

    def checks(self) -> CheckReport:
        tag = self.name if self.k is None else f'{self.name}[k={self.k}]'
        return CheckReport([
            CheckResult(f'{tag}:round-trip', 0, self.round_trip_failures,
                        self.round_trip_failures == 0),
            CheckResult(f'{tag}:inverse-round-trip', 0, self.inverse_round_trip_failures,
                        self.inverse_round_trip_failures == 0),
            CheckResult(f'{tag}:injective', True, self.injective, self.injective),
            CheckResult(f'{tag}:onto-codomain', True, self.images_match_codomain,
                        self.images_match_codomain),
            CheckResult(f'{tag}:cardinalities', self.expected_sizes,
                        (self.domain_size, self.codomain_size),
                        (self.domain_size, self.codomain_size) == self.expected_sizes),
        ])


def sweep(bijection: Bijection, n: int, k: Optional[int] = None,
          budget: Optional[int] = None) -> SweepReport:
    """Run `bijection` over its whole domain and codomain at n."""
    if k is not None and not bijection.takes_k:
        raise ValueError(f'{bijection.name} does not take a defect k')
    if n < bijection.minimum_n:
        raise ValueError(f'{bijection.name} needs n >= {bijection.minimum_n}')
    logger.info('sweeping %s at n=%d', bijection.name, n)

    images = set()
    domain_size = 0
    round_trip_failures = 0
    for m in bijection.domain(n, k, budget):
        domain_size += 1
        image = bijection.forward(m)
        images.add(image)
        if bijection.backward(image) != m:
            round_trip_failures += 1
            logger.debug('%s: backward(forward(%s)) differs', bijection.name, m)

    codomain = set()
    inverse_failures = 0
    for m in bijection.codomain(n, k, budget):
        codomain.add(m)
        if bijection.forward(bijection.backward(m)) != m:
            inverse_failures += 1
            logger.debug('%s: forward(backward(%s)) differs', bijection.name, m)

    return SweepReport(
        name=bijection.name,
        n=n,
        k=k,
        domain_size=domain_size,
        codomain_size=len(codomain),
        expected_sizes=bijection.sizes(n, k),
        round_trip_failures=round_trip_failures,
        inverse_round_trip_failures=inverse_failures,
        images_match_codomain=images == codomain,
        injective=len(images) == domain_size,
    )
