# pinj
# SPDX-License-Identifier: MIT
from fractions import Fraction

import pytest

from pinj.counting import (FIELDS, average_components, chains_total, count_table,
                           defect_count, fixed_points_total, is_card, is_card_next,
                           lah_number, nilpotent_chains_total, orbit_count,
                           partial_injection_count, rank_count, stable_rank_count, t_card,
                           t_card_next)


def test_semigroup_sizes():
    assert [is_card(n) for n in range(9)] == [1, 2, 7, 34, 209, 1546, 13327, 130922, 1441729]


def test_nilpotent_counts():
    assert [t_card(n) for n in range(8)] == [1, 1, 3, 13, 73, 501, 4051, 37633]


def test_lah_rows():
    assert [lah_number(4, k) for k in range(5)] == [0, 24, 36, 12, 1]
    assert lah_number(0, 0) == 1
    assert lah_number(3, 0) == 0
    assert lah_number(3, 4) == 0


def test_rank_and_defect_counts():
    assert [rank_count(3, k) for k in range(4)] == [1, 9, 18, 6]
    assert [defect_count(3, k) for k in range(4)] == [6, 18, 9, 1]
    assert rank_count(3, 5) == 0


def test_small_totals():
    assert chains_total(3) == 3 * 1 + 2 * 9 + 1 * 18
    assert nilpotent_chains_total(3) == 1 * 6 + 2 * 6 + 3 * 1
    assert fixed_points_total(3) == 3 * 7
    assert [stable_rank_count(3, k) for k in range(4)] == [13, 9, 6, 6]


def test_orbit_counts_cover_is_n():
    for n in range(1, 10):
        assert sum(orbit_count(n, k) for k in range(n + 1)) == is_card(n)


def test_partial_injection_count_is_symmetric():
    for i in range(6):
        for j in range(6):
            assert partial_injection_count(i, j) == partial_injection_count(j, i)
    with pytest.raises(ValueError):
        partial_injection_count(-1, 2)


def test_next_size_recomputation():
    for n in range(1, 30):
        assert t_card_next(n) == t_card(n + 1)
        assert is_card_next(n) == is_card(n + 1)


def test_average_components():
    assert average_components(0) == 0
    assert average_components(1) == 1
    assert average_components(2) == Fraction(11, 7)


def test_count_table_fields():
    t = count_table(3)
    assert t.card_is == 34
    assert t.card_t == 13
    assert t.r == (1, 9, 18, 6)
    assert t.d == (6, 18, 9, 1)
    assert t.idempotents == 8
    assert t.b == Fraction(34, 6)
    assert t.field('card_is') == 34
    with pytest.raises(KeyError):
        t.field('nope')
    with pytest.raises(ValueError):
        count_table(-1)


def test_count_table_of_is0():
    t = count_table(0)
    assert (t.card_is, t.card_t, t.lah, t.st) == (1, 1, (1,), (1,))
    assert t.orbit_counts == (1,)
    assert t.c_avg == 0


@pytest.mark.parametrize('n', range(6))
def test_closed_forms_match_enumeration(n, oracle):
    closed = count_table(n)
    enumerated = oracle.tally(n).as_count_table()
    for field in FIELDS:
        assert closed.field(field) == enumerated.field(field), field


@pytest.mark.slow
@pytest.mark.parametrize('n', [6, 7])
def test_closed_forms_match_enumeration_slow(n, oracle):
    closed = count_table(n)
    enumerated = oracle.tally(n).as_count_table()
    for field in FIELDS:
        assert closed.field(field) == enumerated.field(field), field
