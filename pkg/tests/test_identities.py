# pinj
# SPDX-License-Identifier: MIT
from fractions import Fraction

import pytest

from pinj.errors import BudgetExceeded
from pinj.identities import CHECKLIST, IDENTITY_NAMES, NEXT_SIZE_MAX_N, Oracle, verify_identities


@pytest.mark.parametrize('n', range(6))
def test_identities_hold_with_enumeration(n):
    report = verify_identities(n)
    assert report.passed, report.failures


def test_every_applicable_identity_is_enumerated():
    report = verify_identities(4)
    assert all(r.enumerated is not None for r in report)


def test_oracle_covers_every_count_field():
    names = [r.name for r in verify_identities(2, names=['oracle'])]
    assert 'oracle:card_is' in names
    assert 'oracle:c_avg' in names


@pytest.mark.parametrize('n', [12, 40, 150])
def test_closed_forms_hold_beyond_enumeration(n):
    report = verify_identities(n)
    assert report.passed, report.failures
    assert all(r.enumerated is None for r in report)
    assert 'oracle:card_is' not in [r.name for r in report]


def test_closed_form_only_when_enumeration_is_off():
    report = verify_identities(3, use_enumeration=False)
    assert report.passed
    assert all(r.enumerated is None for r in report)


def test_small_budget_skips_enumerated_sides():
    report = verify_identities(4, budget=100)
    assert report.passed
    assert report['idempotent-count'].enumerated is None


def test_require_enumeration():
    with pytest.raises(BudgetExceeded):
        verify_identities(4, budget=100, require_enumeration=True)


def test_selection_by_name():
    report = verify_identities(3, names=['domain-dependence', 'idempotent-count'])
    assert [r.name for r in report] == ['idempotent-count', 'domain-dependence']
    assert report['domain-dependence'].closed_form[0][:2] == (Fraction(21, 34), Fraction(6, 17))


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify_identities(3, names=['no-such-identity'])


def test_small_n_skips_identities_that_need_points():
    names = [r.name for r in verify_identities(0)]
    assert 'domain-dependence' not in names
    assert 'idempotent-count' in names
    assert len(names) < len(CHECKLIST)


def test_negative_n():
    with pytest.raises(ValueError):
        verify_identities(-1)


def test_names_are_unique():
    assert len(set(IDENTITY_NAMES)) == len(IDENTITY_NAMES)


def test_orbit_counts_by_length():
    report = verify_identities(3, names=['orbit-counts', 'nilpotent-orbit-counts'])
    assert [r.name for r in report] == [
        'orbit-counts', 'orbit-counts-by-length', 'nilpotent-orbit-counts',
        'nilpotent-orbit-counts-by-length', 'nilpotent-orbit-counts-isolating-1']
    assert report.passed
    assert report['orbit-counts'].closed_form == ((34, 13), (34, 13))
    assert report['orbit-counts-by-length'].closed_form == (13, 7, 10, 4)
    assert report['orbit-counts-by-length'].enumerated == (13, 7, 10, 4)
    assert report['nilpotent-orbit-counts-isolating-1'].enumerated == 3


def test_orbit_lengths_need_enumeration():
    report = verify_identities(3, names=['orbit-counts'], use_enumeration=False)
    assert report['orbit-counts'].passed
    assert report['orbit-counts-by-length'].passed is None


def test_next_size_is_not_enumerated_past_the_limit():
    report = verify_identities(NEXT_SIZE_MAX_N + 1, names=['next-size-counts'])
    assert report.passed
    assert report['next-size-counts'].enumerated is None


def test_next_size_tally():
    oracle = Oracle()
    assert oracle.next_size_tally(2).card_is == 34
    assert oracle.next_size_tally(NEXT_SIZE_MAX_N + 1) is None
    assert NEXT_SIZE_MAX_N + 2 not in oracle.store
