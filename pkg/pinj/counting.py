# pinj
# SPDX-License-Identifier: MIT
"""Closed-form counts over IS_n and its nilpotent part T_n.

Everything here is exact integer or Fraction arithmetic; nothing enumerates.

>>> t = count_table(3)
>>> t.card_is, t.card_t, t.lah
(34, 13, (0, 6, 6, 1))
>>> count_table(2).orbit_counts
(3, 2, 2)
"""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, perm
from typing import Tuple

import attr

# Names accepted by `count --field`.
FIELDS = (
    'card_is', 'card_t', 'r', 'd', 'lah', 'st', 'chains_total',
    'chains_total_nilpotent', 'chains_by_length', 'cycles_by_length',
    'fixed_points_total', 'orbit_counts', 'orbit_counts_nilpotent',
    'idempotents', 'b', 'c_avg',
)


def falling(x: int, k: int) -> int:
    """[x]_k = x(x-1)...(x-k+1), zero once k exceeds x.

    >>> falling(5, 2), falling(3, 0), falling(2, 3)
    (20, 1, 0)
    """
    return perm(x, k)


def binomial(n: int, k: int) -> int:
    return comb(n, k)


@lru_cache(maxsize=None)
def rank_count(n: int, k: int) -> int:
    """R_{n,k}: elements of IS_n with rank k."""
    if not 0 <= k <= n:
        return 0
    return comb(n, k) ** 2 * factorial(k)


def defect_count(n: int, k: int) -> int:
    """D_{n,k} = R_{n,n-k}."""
    if not 0 <= k <= n:
        return 0
    return rank_count(n, n - k)


@lru_cache(maxsize=None)
def is_card(n: int) -> int:
    """|IS_n|.

    >>> [is_card(n) for n in range(5)]
    [1, 2, 7, 34, 209]
    """
    return sum(rank_count(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def lah_number(n: int, k: int) -> int:
    """Signless Lah number L'(n,k): nilpotents of IS_n with defect k.

    L'(0,0) = 1, matching |T_0| = 1.
    """
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return factorial(n) // factorial(k) * comb(n - 1, k - 1)


@lru_cache(maxsize=None)
def t_card(n: int) -> int:
    """|T_n|.

    >>> [t_card(n) for n in range(5)]
    [1, 1, 3, 13, 73]
    """
    return sum(lah_number(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def chains_total(n: int) -> int:
    """L_n: chains summed over all of IS_n."""
    return sum((n - k) * rank_count(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def nilpotent_chains_total(n: int) -> int:
    """L^(n): chains summed over T_n (a defect-k nilpotent has k chains)."""
    return sum(k * lah_number(n, k) for k in range(n + 1))


def stable_rank_count(n: int, k: int) -> int:
    """St_{n,k}: elements whose cycles cover exactly k points."""
    if not 0 <= k <= n:
        return 0
    return falling(n, k) * t_card(n - k)


def chains_of_length(n: int, k: int) -> int:
    """L_{n,k}: chains of length k summed over IS_n."""
    if not 1 <= k <= n:
        return 0
    return falling(n, k) * is_card(n - k)


def cycles_of_length(n: int, k: int) -> int:
    """C_{n,k}: cycles of length k summed over IS_n."""
    if not 1 <= k <= n:
        return 0
    return falling(n, k) * is_card(n - k) // k


def fixed_points_total(n: int) -> int:
    """P_n = C_{n,1}."""
    return n * is_card(n - 1) if n else 0


def orbit_count(n: int, k: int) -> int:
    """l_{n,k}: elements of IS_n in which the orbit of 1 has length k.

    IS_0 has no point 1; its single element is counted under k = 0.
    """
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return t_card(n)
    if k == 1:
        return is_card(n - 1)
    if k > n:
        return 0
    return falling(n - 1, k - 1) * (chains_total(n - k) + 2 * is_card(n - k))


def nilpotent_orbit_count(n: int, k: int) -> int:
    """l^{n,k}: nilpotent elements in which the orbit of 1 has length k."""
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return is_card(n - 1)
    if k == 1 or k > n:
        return 0
    return falling(n - 1, k - 1) * (nilpotent_chains_total(n - k) + t_card(n - k))


def partial_injection_count(i: int, j: int) -> int:
    """I(i,j): partial injections from an i-set into a j-set.

    >>> partial_injection_count(2, 3), partial_injection_count(0, 5), partial_injection_count(1, 1)
    (13, 1, 2)
    """
    if i < 0 or j < 0:
        raise ValueError(f'set sizes must be >= 0, got {i}, {j}')
    return sum(comb(i, k) * comb(j, k) * factorial(k) for k in range(min(i, j) + 1))


def t_card_next(n: int) -> int:
    """|T_{n+1}| recomputed as sum (n+k+1) L'(n,k); valid for n >= 1."""
    return sum((n + k + 1) * lah_number(n, k) for k in range(1, n + 1))


def is_card_next(n: int) -> int:
    """|IS_{n+1}| recomputed as sum (2n-k+2) R_{n,k}."""
    return sum((2 * n - k + 2) * rank_count(n, k) for k in range(n + 1))


def average_components(n: int) -> Fraction:
    """c_n: mean number of cycles plus chains of a uniform element."""
    if n == 0:
        return Fraction(0)
    total = sum(falling(n, k) * (1 + Fraction(1, k)) * is_card(n - k) for k in range(1, n + 1))
    return total / is_card(n)


@attr.frozen
class CountTable:
    """Every closed-form count for one n.

    Sequences are indexed 0..n. Entries that only make sense for k >= 1 carry
    a zero at k = 0, except lah where L'(0,0) = 1.
    """

    n: int
    card_is: int
    card_t: int
    r: Tuple[int, ...]
    d: Tuple[int, ...]
    lah: Tuple[int, ...]
    st: Tuple[int, ...]
    chains_total: int
    chains_total_nilpotent: int
    chains_by_length: Tuple[int, ...]
    cycles_by_length: Tuple[int, ...]
    fixed_points_total: int
    orbit_counts: Tuple[int, ...]
    orbit_counts_nilpotent: Tuple[int, ...]
    idempotents: int
    b: Fraction
    c_avg: Fraction

    def field(self, name):
        if name not in FIELDS:
            raise KeyError(f'unknown count field {name!r}; choose from {", ".join(FIELDS)}')
        return getattr(self, name)


def count_table(n: int) -> CountTable:
    if n < 0:
        raise ValueError(f'n must be >= 0, got {n}')
    ks = range(n + 1)
    return CountTable(
        n=n,
        card_is=is_card(n),
        card_t=t_card(n),
        r=tuple(rank_count(n, k) for k in ks),
        d=tuple(defect_count(n, k) for k in ks),
        lah=tuple(lah_number(n, k) for k in ks),
        st=tuple(stable_rank_count(n, k) for k in ks),
        chains_total=chains_total(n),
        chains_total_nilpotent=nilpotent_chains_total(n),
        chains_by_length=tuple(chains_of_length(n, k) for k in ks),
        cycles_by_length=tuple(cycles_of_length(n, k) for k in ks),
        fixed_points_total=fixed_points_total(n),
        orbit_counts=tuple(orbit_count(n, k) for k in ks),
        orbit_counts_nilpotent=tuple(nilpotent_orbit_count(n, k) for k in ks),
        idempotents=2 ** n,
        b=Fraction(is_card(n), factorial(n)),
        c_avg=average_components(n),
    )
