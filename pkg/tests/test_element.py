# pinj
# SPDX-License-Identifier: MIT
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pinj.element import (ChartDecomposition, Terminal, chain_type, chart_decomposition,
                          compose, conjugate, from_chart, from_map, from_pairs, identity,
                          inverse, is_idempotent, is_nilpotent, orbit, permutational_part,
                          power, profile, restrict, stable_rank, zero)
from pinj.enumeration import enumerate_elements
from pinj.errors import (DuplicateDomainPoint, DuplicateImagePoint, MissingPoint,
                         PointOutOfRange, RepeatedPoint, SizeMismatch)
from tests.strategies import partial_injections, same_size

WORKED_PAIRS = [(1, 7), (2, 4), (3, 5), (4, 1), (5, 10), (7, 2), (9, 6)]


@pytest.fixture
def worked():
    return from_pairs(10, WORKED_PAIRS)


def test_worked_example_chart(worked):
    chart = chart_decomposition(worked)
    assert chart.cycles == ((1, 7, 2, 4),)
    assert chart.chains == ((3, 5, 10), (9, 6), (8,))
    assert str(worked) == '(1,7,2,4)[3,5,10][9,6][8]'


def test_worked_example_profile(worked):
    p = profile(worked)
    assert (p.rank, p.defect, p.stable_rank) == (7, 3, 4)
    assert not p.is_nilpotent
    assert p.nilpotency_index == 0
    assert p.fixed_point_count == 0
    assert p.chain_type.cycle_counts == (0, 0, 0, 1, 0, 0, 0, 0, 0, 0)
    assert p.chain_type.chain_counts == (1, 1, 1, 0, 0, 0, 0, 0, 0, 0)


def test_worked_example_inverse(worked):
    assert str(inverse(worked)) == '(1,4,2,7)[10,5,3][6,9][8]'


def test_worked_example_orbits(worked):
    trace = orbit(worked, 3)
    assert trace.points == (3, 5, 10)
    assert trace.terminal == Terminal.LEAVES_DOMAIN
    assert orbit(worked, 2).points == (2, 4, 1, 7)
    assert orbit(worked, 2).terminal == Terminal.REENTERS_CYCLE
    assert orbit(worked, 8).length == 0


def test_products_apply_left_factor_first():
    a = from_pairs(3, [(1, 2)])
    b = from_pairs(3, [(2, 3)])
    assert (a * b)(1) == 3
    assert (b * a)(1) is None
    assert compose(b, a) == from_pairs(3, [])


def test_power_of_a_cycle():
    c = from_pairs(3, [(1, 2), (2, 3), (3, 1)])
    assert power(c, 3) == identity(3)
    assert power(c, 0) == identity(3)
    assert power(c, 4) == c


def test_zero_and_identity_profiles():
    assert profile(identity(4)).fixed_point_count == 4
    assert profile(zero(4)).chain_type.chain_counts == (4, 0, 0, 0)
    assert profile(zero(0)).nilpotency_index == 1
    assert is_idempotent(restrict(identity(4), [1, 3]))


def test_from_pairs_rejects_bad_input():
    with pytest.raises(PointOutOfRange):
        from_pairs(2, [(1, 3)])
    with pytest.raises(DuplicateDomainPoint):
        from_pairs(3, [(1, 2), (1, 3)])
    with pytest.raises(DuplicateImagePoint):
        from_pairs(3, [(1, 2), (3, 2)])
    with pytest.raises(ValueError):
        from_pairs(-1, [])


def test_from_map_checks_length():
    with pytest.raises(ValueError):
        from_map(3, [1, 2])


def test_from_chart_rejects_incomplete_charts():
    with pytest.raises(MissingPoint) as e:
        from_chart(ChartDecomposition(cycles=((1, 2),)), 4)
    assert e.value.points == [3, 4]
    with pytest.raises(RepeatedPoint):
        from_chart(ChartDecomposition(cycles=((1, 2),), chains=((2, 3),)), 3)
    with pytest.raises(PointOutOfRange):
        from_chart(ChartDecomposition(chains=((1, 4),)), 3)


def test_from_chart_accepts_any_rotation():
    rotated = from_chart(ChartDecomposition(cycles=((7, 2, 4, 1),),
                                            chains=((8,), (9, 6), (3, 5, 10))), 10)
    assert rotated == from_pairs(10, WORKED_PAIRS)


def test_mismatched_sizes():
    with pytest.raises(SizeMismatch):
        compose(identity(2), identity(3))


def test_negative_power():
    with pytest.raises(ValueError):
        power(identity(2), -1)


def test_call_outside_ground_set():
    with pytest.raises(PointOutOfRange):
        identity(2)(3)


@given(partial_injections())
def test_chart_round_trip(a):
    assert from_chart(chart_decomposition(a), a.n) == a


@given(partial_injections())
def test_chart_covers_every_point_once(a):
    points = list(chart_decomposition(a).points())
    assert sorted(points) == list(range(1, a.n + 1))


@given(partial_injections())
def test_inverse_is_an_involution(a):
    assert inverse(inverse(a)) == a


@given(partial_injections())
def test_inverse_is_a_regular_inverse(a):
    assert a * inverse(a) * a == a
    assert inverse(a) * a * inverse(a) == inverse(a)
    assert a * inverse(a) == restrict(identity(a.n), a.domain)


@given(same_size(3))
def test_products_are_associative(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)


@given(partial_injections())
def test_rank_and_defect(a):
    p = profile(a)
    assert p.rank + p.defect == a.n
    assert p.stable_rank <= p.rank
    assert stable_rank(a) == permutational_part(a).rank
    assert sum(p.chain_type.chain_counts) == p.defect


@given(partial_injections())
def test_chain_type_weights_sum_to_n(a):
    ct = chain_type(a)
    weight = sum(i * (c + d) for i, (c, d) in
                 enumerate(zip(ct.cycle_counts, ct.chain_counts), 1))
    assert weight == a.n


@given(partial_injections(min_n=1))
def test_nilpotency_index(a):
    p = profile(a)
    if not is_nilpotent(a):
        assert p.nilpotency_index == 0
        return
    assert power(a, p.nilpotency_index) == zero(a.n)
    assert power(a, p.nilpotency_index - 1) != zero(a.n)


@given(partial_injections(min_n=2))
def test_conjugation_keeps_chain_type(a):
    assert chain_type(conjugate(a, 1, 2)) == chain_type(a)


@given(partial_injections(min_n=1))
def test_orbit_follows_the_map(a):
    trace = orbit(a, 1)
    for p, q in zip(trace.points, trace.points[1:]):
        assert a(p) == q
    if trace.terminal == Terminal.REENTERS_CYCLE:
        assert a(trace.points[-1]) == 1


def test_fourth_power_fixes_the_cycle(worked):
    fourth = power(worked, 4)
    assert all(fourth(p) == p for p in (1, 7, 2, 4))


def test_power_of_a_short_chain():
    assert power(from_pairs(2, [(1, 2)]), 2) == zero(2)
    assert power(identity(3), 100) == identity(3)


def test_inverse_keeps_chain_type(worked):
    assert chain_type(inverse(worked)) == chain_type(worked)
    assert inverse(zero(3)) == zero(3)


def test_associativity_on_all_of_is3():
    elements = list(enumerate_elements(3))
    for a in elements:
        for b in elements:
            ab = a * b
            for c in elements:
                assert ab * c == a * (b * c)


@given(partial_injections())
def test_identity_and_zero_laws(a):
    assert a * identity(a.n) == a == identity(a.n) * a
    assert a * zero(a.n) == zero(a.n) == zero(a.n) * a


@given(partial_injections(), st.integers(min_value=1, max_value=12))
def test_powers_keep_stable_rank(a, i):
    assert stable_rank(power(a, i)) == stable_rank(a)


@given(partial_injections())
def test_nilpotent_iff_nth_power_vanishes(a):
    assert is_nilpotent(a) == (power(a, a.n) == zero(a.n))


@given(partial_injections(min_n=2), st.data())
def test_conjugation_maps_orbits(a, data):
    x = data.draw(st.integers(min_value=1, max_value=a.n))
    y = data.draw(st.integers(min_value=1, max_value=a.n))
    swap = {x: y, y: x}
    moved = orbit(conjugate(a, x, y), y)
    assert moved.length == orbit(a, x).length
    assert moved.points == tuple(swap.get(p, p) for p in orbit(a, x).points)
