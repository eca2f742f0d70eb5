# pinj
# SPDX-License-Identifier: MIT
"""Counting identities over IS_n, each checked in closed form and against
brute-force enumeration.

Every identity is a checker class in CHECKLIST. A checker evaluates two
closed-form sides and, when the oracle can afford it, the enumerated value of
the same quantity:

>>> report = verify_identities(3, names=['domain-dependence'])
>>> report['domain-dependence'].enumerated
(Fraction(21, 34), Fraction(6, 17), True)
>>> report.passed
True
"""
import logging
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, List, Optional

from pinj import config
from pinj.checks import CheckReport, CheckResult, compare
from pinj.counting import (FIELDS, average_components, chains_of_length, chains_total,
                           count_table, cycles_of_length, defect_count, falling,
                           fixed_points_total, is_card, is_card_next, lah_number,
                           nilpotent_chains_total, nilpotent_orbit_count, orbit_count,
                           partial_injection_count, rank_count, stable_rank_count,
                           t_card, t_card_next)
from pinj.enumeration import Tally, tally
from pinj.errors import BudgetExceeded

logger = logging.getLogger(__name__)

# Identities at n above this do not enumerate IS_{n+1}.
NEXT_SIZE_MAX_N = 7


class Oracle(object):
    """Enumerated tallies, computed once per n and kept."""

    def __init__(self, budget: Optional[int] = None):
        self.budget = config.load().enumeration_budget if budget is None else budget
        self.store = {}

    def affordable(self, n: int) -> bool:
        return 0 <= n and is_card(n) <= self.budget

    def tally(self, n: int) -> Optional[Tally]:
        """The tally of IS_n, or None when it is out of budget."""
        if n in self.store:
            return self.store[n]
        if not self.affordable(n):
            logger.info('IS_%d has %d elements, over the budget of %d; '
                        'enumerated sides skipped', n, is_card(n) if n >= 0 else 0, self.budget)
            self.store[n] = None
            return None
        logger.info('enumerating IS_%d (%d elements)', n, is_card(n))
        self.store[n] = tally(n, budget=self.budget)
        return self.store[n]

    def next_size_tally(self, n: int) -> Optional[Tally]:
        if n > NEXT_SIZE_MAX_N:
            logger.info('IS_%d is not enumerated for identities at n=%d', n + 1, n)
            return None
        return self.tally(n + 1)


class IdentityChecker(object):
    """One named identity.

    Subclasses define `sides(n)` returning the two closed-form sides and
    `enumerated(n, oracle)` returning the enumerated value of the left side,
    or None when the oracle cannot supply it.
    """

    name = None
    minimum_n = 0

    def applies(self, n: int) -> bool:
        return n >= self.minimum_n

    def sides(self, n: int):
        raise NotImplementedError(
            'check is not a concrete subclass of IdentityChecker')

    def enumerated(self, n: int, oracle: Oracle):
        return None

    def perform_check(self, n: int, oracle: Optional[Oracle]) -> List[CheckResult]:
        lhs, rhs = self.sides(n)
        enumerated = self.enumerated(n, oracle) if oracle is not None else None
        return [compare(self.name, lhs, rhs, enumerated)]


def _tally(oracle, n):
    return oracle.tally(n)


class NilpotentsByDefectSum(IdentityChecker):
    """|T_n| = sum (k/n) D_{n,k} = sum ((n-k)/n) R_{n,k}."""
    name = 'nilpotents-by-defect-sum'
    minimum_n = 1

    def sides(self, n):
        by_defect = sum(Fraction(k, n) * defect_count(n, k) for k in range(1, n + 1))
        by_rank = sum(Fraction(n - k, n) * rank_count(n, k) for k in range(n + 1))
        return (t_card(n), t_card(n)), (by_defect, by_rank)

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and (t.card_t, t.card_t)


class LahDefectBalance(IdentityChecker):
    """n L'(n,k) = k D_{n,k} for every defect k."""
    name = 'lah-defect-balance'
    minimum_n = 1

    def sides(self, n):
        return (tuple(n * lah_number(n, k) for k in range(1, n + 1)),
                tuple(k * defect_count(n, k) for k in range(1, n + 1)))

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and tuple(n * t.lah[k] for k in range(1, n + 1))


class IdempotentCount(IdentityChecker):
    """Idempotents are the partial identities, one per subset."""
    name = 'idempotent-count'

    def sides(self, n):
        return 2 ** n, sum(comb(n, k) for k in range(n + 1))

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and t.idempotents


class LahRecurrence(IdentityChecker):
    """Nilpotents by defect: L'(n,k) = L'(n-1,k-1) + (n+k-1) L'(n-1,k)."""
    name = 'lah-recurrence'

    def sides(self, n):
        closed = tuple(lah_number(n, k) for k in range(n + 1))
        if n == 0:
            return closed, (1,)
        recurred = tuple(
            (lah_number(n - 1, k - 1) if k else 0) + (n + k - 1) * lah_number(n - 1, k)
            for k in range(n + 1))
        return closed, recurred

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and tuple(t.lah)


class StableRankCount(IdentityChecker):
    """St_{n,k} = [n]_k * sum_i L'(n-k,i), the sum read as |T_0| = 1 at k = n."""
    name = 'stable-rank-count'

    def sides(self, n):
        closed = tuple(stable_rank_count(n, k) for k in range(n + 1))
        summed = tuple(
            falling(n, k) * (sum(lah_number(n - k, i) for i in range(1, n - k + 1)) if k < n else 1)
            for k in range(n + 1))
        return closed, summed

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and tuple(t.st)


class ChainAndCycleLengths(IdentityChecker):
    """Chains and cycles of each length, summed over IS_n."""
    name = 'chain-and-cycle-lengths'

    def sides(self, n):
        closed = (tuple(chains_of_length(n, k) for k in range(n + 1)),
                  tuple(cycles_of_length(n, k) for k in range(n + 1)))
        # k points make k! chains and (k-1)! cycles
        direct = (tuple(comb(n, k) * factorial(k) * is_card(n - k) if k else 0
                        for k in range(n + 1)),
                  tuple(comb(n, k) * factorial(k - 1) * is_card(n - k) if k else 0
                        for k in range(n + 1)))
        return closed, direct

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and (tuple(t.chains_by_length), tuple(t.cycles_by_length))


class AverageComponents(IdentityChecker):
    """c_n = b_n^-1 sum (1 + 1/k) b_{n-k}."""
    name = 'average-components'

    def sides(self, n):
        b = [Fraction(is_card(i), factorial(i)) for i in range(n + 1)]
        via_b = sum((1 + Fraction(1, k)) * b[n - k] for k in range(1, n + 1)) / b[n]
        return average_components(n), via_b

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and Fraction(t.components_total, t.card_is)


class ComponentTotal(IdentityChecker):
    """c_n |IS_n| = sum [n]_k (1 + 1/k) |IS_{n-k}| = sum (L_{n,k} + C_{n,k})."""
    name = 'component-total'

    def sides(self, n):
        line = sum(falling(n, k) * (1 + Fraction(1, k)) * is_card(n - k) for k in range(1, n + 1))
        by_length = sum(chains_of_length(n, k) + cycles_of_length(n, k) for k in range(1, n + 1))
        return line, by_length

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and t.components_total


class ChainTotal(IdentityChecker):
    """L_n = sum (n-k) R_{n,k}: an element of defect d has d chains."""
    name = 'chain-total'

    def sides(self, n):
        return chains_total(n), sum(k * defect_count(n, k) for k in range(n + 1))

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and t.chains_total


class ChainTotalByLength(IdentityChecker):
    """sum (n-k) C(n,k)^2 k! = sum [n]_k |IS_{n-k}|."""
    name = 'chain-total-by-length'

    def sides(self, n):
        return (sum((n - k) * comb(n, k) ** 2 * factorial(k) for k in range(n)),
                sum(falling(n, k) * is_card(n - k) for k in range(1, n + 1)))

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and t.chains_total


class RankDefectBalance(IdentityChecker):
    """Average rank plus average defect is n."""
    name = 'rank-defect-balance'
    minimum_n = 1

    def sides(self, n):
        total = sum(k * rank_count(n, k) + falling(n, k) * is_card(n - k) for k in range(1, n + 1))
        return Fraction(total, n), is_card(n)

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and Fraction(sum(k * c for k, c in enumerate(t.r)) + t.chains_total, n)


class FixedPointsAndChains(IdentityChecker):
    """P_n + L_n / n = |IS_n|."""
    name = 'fixed-points-and-chains'
    minimum_n = 1

    def sides(self, n):
        return fixed_points_total(n) + Fraction(chains_total(n), n), is_card(n)

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and t.fixed_points_total + Fraction(t.chains_total, n)


class ChainsEqualStableRank(IdentityChecker):
    """L_n equals the stable rank summed over IS_n."""
    name = 'chains-equal-stable-rank'

    def sides(self, n):
        return chains_total(n), sum(k * stable_rank_count(n, k) for k in range(n + 1))

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and t.stable_rank_total


class OrbitLengthsEqualChains(IdentityChecker):
    """The orbit lengths of 1 summed over IS_n equal L_n."""
    name = 'orbit-lengths-equal-chains'
    minimum_n = 1

    def sides(self, n):
        return sum(k * orbit_count(n, k) for k in range(n + 1)), chains_total(n)

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and sum(k * c for k, c in enumerate(t.orbit_counts))


def _observed(name, closed, observed):
    """A closed form checked against enumeration alone; informational without it."""
    return CheckResult(name, closed, observed, None if observed is None else observed == closed)


class OrbitCounts(IdentityChecker):
    """l_{n,k}: the orbit of 1 has length k; the counts cover IS_n, and l_{n,0}
    counts the partial injections {2..n} -> {1..n}."""
    name = 'orbit-counts'
    minimum_n = 1

    def sides(self, n):
        closed = tuple(orbit_count(n, k) for k in range(n + 1))
        return (sum(closed), closed[0]), (is_card(n), partial_injection_count(n - 1, n))

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and (t.card_is, t.card_is - t.one_in_dom)

    def perform_check(self, n, oracle):
        results = super().perform_check(n, oracle)
        t = _tally(oracle, n) if oracle is not None else None
        results.append(_observed(f'{self.name}-by-length',
                                 tuple(orbit_count(n, k) for k in range(n + 1)),
                                 t and tuple(t.orbit_counts)))
        return results


class NilpotentOrbitCounts(IdentityChecker):
    """l^{n,k} over T_n; the counts cover T_n, and the nilpotents with the
    singleton chain [1] number |T_{n-1}|."""
    name = 'nilpotent-orbit-counts'
    minimum_n = 1

    def sides(self, n):
        return sum(nilpotent_orbit_count(n, k) for k in range(n + 1)), t_card(n)

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and t.card_t

    def perform_check(self, n, oracle):
        results = super().perform_check(n, oracle)
        t = _tally(oracle, n) if oracle is not None else None
        results.extend([
            _observed(f'{self.name}-by-length',
                      tuple(nilpotent_orbit_count(n, k) for k in range(n + 1)),
                      t and tuple(t.orbit_counts_nilpotent)),
            _observed(f'{self.name}-isolating-1', t_card(n - 1), t and t.nilpotent_one_isolated),
        ])
        return results


class ChainsPerPoint(IdentityChecker):
    """|T_n| = L_n / n and |IS_n| = L^(n+1) / (n+1)."""
    name = 'chains-per-point'
    minimum_n = 1

    def sides(self, n):
        return ((t_card(n), is_card(n)),
                (Fraction(chains_total(n), n), Fraction(nilpotent_chains_total(n + 1), n + 1)))

    def enumerated(self, n, oracle):
        t, t_next = _tally(oracle, n), oracle.next_size_tally(n)
        if t is None or t_next is None:
            return None
        return Fraction(t.chains_total, n), Fraction(t_next.chains_total_nilpotent, n + 1)


class NilpotentRecursion(IdentityChecker):
    """|T_n| = |IS_{n-1}| + L_{n-1} and |IS_n| = |T_n| + L^(n)."""
    name = 'nilpotent-recursion'
    minimum_n = 1

    def sides(self, n):
        return ((t_card(n), is_card(n)),
                (is_card(n - 1) + chains_total(n - 1), t_card(n) + nilpotent_chains_total(n)))

    def enumerated(self, n, oracle):
        t, t_prev = _tally(oracle, n), _tally(oracle, n - 1)
        if t is None or t_prev is None:
            return None
        return t_prev.card_is + t_prev.chains_total, t.card_t + t.chains_total_nilpotent


class StableRankExpansion(IdentityChecker):
    """|IS_n| = sum [n]_k |T_{n-k}| = sum [n-1]_{k-1} (n+k) |T_{n-k}|."""
    name = 'stable-rank-expansion'
    minimum_n = 1

    def sides(self, n):
        return ((is_card(n), is_card(n)),
                (sum(falling(n, k) * t_card(n - k) for k in range(n + 1)),
                 sum(falling(n - 1, k - 1) * (n + k) * t_card(n - k) for k in range(1, n + 1))))

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and (sum(t.st), t.card_is)


class NilpotentSelfRecursion(IdentityChecker):
    """|T_n| = sum k [n-1]_{k-1} |T_{n-k}|."""
    name = 'nilpotent-self-recursion'
    minimum_n = 1

    def sides(self, n):
        return t_card(n), sum(k * falling(n - 1, k - 1) * t_card(n - k) for k in range(1, n + 1))

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and t.card_t


class NilpotentsAsInjections(IdentityChecker):
    """|T_n| = I(n-1, n) = I(n, n-1): 1 is missing from the domain, or from
    the image."""
    name = 'nilpotents-as-injections'
    minimum_n = 1

    def sides(self, n):
        return ((t_card(n), t_card(n)),
                (partial_injection_count(n - 1, n), partial_injection_count(n, n - 1)))

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        return t and (t.card_is - t.one_in_dom, t.card_is - t.one_in_image)


class NextSizeCounts(IdentityChecker):
    """|T_{n+1}| and |IS_{n+1}| rebuilt by inserting the point n+1."""
    name = 'next-size-counts'
    minimum_n = 1

    def sides(self, n):
        return (t_card(n + 1), is_card(n + 1)), (t_card_next(n), is_card_next(n))

    def enumerated(self, n, oracle):
        t_next = oracle.next_size_tally(n)
        return t_next and (t_next.card_t, t_next.card_is)


class DomainDependence(IdentityChecker):
    """Pr(1 in dom) and Pr(1, 2 in dom) for a uniform element, and the fact
    that the two events are not independent."""
    name = 'domain-dependence'
    minimum_n = 2

    def sides(self, n):
        total = is_card(n)
        p1 = Fraction(n * is_card(n - 1), total)
        p12 = Fraction(falling(n, 2) * is_card(n - 2), total)
        # complements of "1 missing" and "1 or 2 missing"
        q1 = Fraction(total - partial_injection_count(n - 1, n), total)
        q12 = Fraction(total - 2 * partial_injection_count(n - 1, n)
                       + partial_injection_count(n - 2, n), total)
        return (p1, p12, p12 != p1 ** 2), (q1, q12, True)

    def enumerated(self, n, oracle):
        t = _tally(oracle, n)
        if t is None:
            return None
        p1 = Fraction(t.one_in_dom, t.card_is)
        p12 = Fraction(t.one_and_two_in_dom, t.card_is)
        return p1, p12, p12 != p1 ** 2


class OracleEquivalence(IdentityChecker):
    """Every CountTable field against its brute-force tally."""
    name = 'oracle'

    def perform_check(self, n, oracle):
        t = _tally(oracle, n) if oracle is not None else None
        if t is None:
            return []
        closed, enumerated = count_table(n), t.as_count_table()
        return [
            compare(f'oracle:{field}', closed.field(field), closed.field(field),
                    enumerated.field(field))
            for field in FIELDS]


CHECKLIST = [
    NilpotentsByDefectSum,
    LahDefectBalance,
    IdempotentCount,
    LahRecurrence,
    StableRankCount,
    ChainAndCycleLengths,
    AverageComponents,
    ComponentTotal,
    ChainTotal,
    ChainTotalByLength,
    RankDefectBalance,
    FixedPointsAndChains,
    ChainsEqualStableRank,
    OrbitLengthsEqualChains,
    OrbitCounts,
    NilpotentOrbitCounts,
    ChainsPerPoint,
    NilpotentRecursion,
    StableRankExpansion,
    NilpotentSelfRecursion,
    NilpotentsAsInjections,
    NextSizeCounts,
    DomainDependence,
    OracleEquivalence,
]

IDENTITY_NAMES = [check.name for check in CHECKLIST]


def select(names: Optional[Iterable[str]] = None):
    if names is None:
        return list(CHECKLIST)
    names = list(names)
    unknown = [name for name in names if name not in IDENTITY_NAMES]
    if unknown:
        raise KeyError(f'unknown identity {", ".join(unknown)}; '
                       f'choose from {", ".join(IDENTITY_NAMES)}')
    return [check for check in CHECKLIST if check.name in names]


def verify_identities(n: int, names: Optional[Iterable[str]] = None,
                      budget: Optional[int] = None, use_enumeration: bool = True,
                      require_enumeration: bool = False) -> CheckReport:
    """Check the selected identities at n.

    Enumerated sides use the tallies of IS_{n-1}, IS_n and, up to
    NEXT_SIZE_MAX_N, IS_{n+1}, as far as `budget` allows; beyond it the
    identities are checked in closed form only and report `enumerated` as None.
    With `require_enumeration` an unaffordable IS_n raises BudgetExceeded
    instead.
    """
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    oracle = Oracle(budget) if use_enumeration else None
    if oracle is not None and not oracle.affordable(n) and require_enumeration:
        raise BudgetExceeded(is_card(n), oracle.budget)

    report = CheckReport()
    for check in select(names):
        checker = check()
        if not checker.applies(n):
            continue
        results = checker.perform_check(n, oracle)
        for r in results:
            logger.debug('%s at n=%d: %s', r.name, n, 'pass' if r.passed else 'FAIL')
        report.extend(results)
    return report
