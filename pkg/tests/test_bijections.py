# pinj
# SPDX-License-Identifier: MIT
import pytest

from pinj.bijections import (BIJECTIONS, ChainMark, CycleMark, MarkedElement, PointMark,
                             PointPairMark, cycle_chain_backward, cycle_chain_forward,
                             fixed_point_backward, fixed_point_forward, lah_defect_forward,
                             orbit_chain_backward, orbit_chain_forward, permpart_chain_backward,
                             permpart_chain_forward, sweep)
from pinj.element import from_pairs, identity
from pinj.errors import InvalidMark, NotNilpotent

SWEEPS = [(name, n) for name, b in BIJECTIONS.items() for n in range(b.minimum_n, 5)]


@pytest.mark.parametrize('name,n', SWEEPS)
def test_sweep(name, n):
    report = sweep(BIJECTIONS[name], n)
    assert report.passed, report
    assert report.checks().passed


@pytest.mark.parametrize('n,k', [(n, k) for n in range(1, 5) for k in range(1, n + 1)])
def test_lah_defect_sweep_by_defect(n, k):
    report = sweep(BIJECTIONS['lah_defect_map'], n, k)
    assert report.passed, report


def test_sweep_sizes_at_three():
    report = sweep(BIJECTIONS['cycle_chain_map'], 3)
    assert report.domain_size == report.codomain_size == 3 * 1 + 2 * 9 + 1 * 18


def test_sweep_rejects_defect_for_plain_maps():
    with pytest.raises(ValueError):
        sweep(BIJECTIONS['cycle_chain_map'], 3, k=1)
    with pytest.raises(ValueError):
        sweep(BIJECTIONS['orbit_chain_map'], 0)


def test_cycle_opens_at_base_point():
    a = from_pairs(3, [(1, 2), (2, 3), (3, 1)])
    b = cycle_chain_forward(MarkedElement(a, CycleMark(0, 2)))
    assert str(b.element) == '[2,3,1]'
    assert cycle_chain_backward(b) == MarkedElement(a, CycleMark(0, 2))


def test_fixed_point_maps_on_a_chain():
    a = from_pairs(3, [(1, 2), (2, 3)])
    # interior point: removed from the chain, marked with its predecessor
    m = fixed_point_forward(MarkedElement(a, PointMark(2)))
    assert str(m.element) == '(2)[1,3]'
    assert m.mark == PointPairMark(2, 1)
    # source: the rest of the chain closes into a cycle
    m = fixed_point_forward(MarkedElement(a, PointMark(1)))
    assert str(m.element) == '(1)(2,3)'
    assert m.mark == PointPairMark(1, 2)
    assert fixed_point_backward(m) == MarkedElement(a, PointMark(1))


def test_fixed_point_maps_on_a_cycle():
    a = identity(2)
    m = fixed_point_forward(MarkedElement(a, PointMark(2)))
    assert str(m.element) == '(1)[2]'
    assert m.mark == ChainMark(0)


def test_orbit_chain_splits_the_chain_of_one():
    a = from_pairs(4, [(1, 2), (2, 3), (3, 4)])
    m = orbit_chain_forward(MarkedElement(a, PointMark(3)))
    assert str(m.element) == '[1,2][3,4]'
    assert orbit_chain_backward(m) == MarkedElement(a, PointMark(3))
    m = orbit_chain_forward(MarkedElement(a, PointMark(1)))
    assert str(m.element) == '(1)[2,3,4]'


def test_permpart_chain():
    a = from_pairs(3, [(1, 2), (2, 1)])
    m = permpart_chain_forward(MarkedElement(a, PointMark(3)))
    assert str(m.element) == '[2,1,3]'
    assert permpart_chain_backward(m) == MarkedElement(a, PointMark(3))


def test_invalid_marks():
    a = from_pairs(3, [(1, 2), (2, 3)])
    with pytest.raises(InvalidMark):
        cycle_chain_forward(MarkedElement(a, CycleMark(0, 1)))
    with pytest.raises(InvalidMark):
        orbit_chain_forward(MarkedElement(from_pairs(3, [(2, 3)]), PointMark(2)))
    with pytest.raises(InvalidMark):
        permpart_chain_forward(MarkedElement(a, PointMark(2)))
    with pytest.raises(InvalidMark):
        lah_defect_forward(MarkedElement(a, ChainMark(0)))
    with pytest.raises(InvalidMark):
        lah_defect_forward(MarkedElement(a, PointMark(4)))
    with pytest.raises(NotNilpotent):
        lah_defect_forward(MarkedElement(identity(2), PointMark(1)))
