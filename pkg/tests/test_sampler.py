# pinj
# SPDX-License-Identifier: MIT
from fractions import Fraction

import pytest

from pinj.config import Settings
from pinj.sampler import SEED_LIMIT, monte_carlo

SMALL_BLOCKS = Settings(mc_block_size=100)


def test_same_seed_same_histogram():
    a = monte_carlo(3, 2, 2000, seed=7)
    b = monte_carlo(3, 2, 2000, seed=7)
    assert a.rank_histogram == b.rank_histogram
    assert sum(a.rank_histogram) == 2000


def test_different_seeds_differ():
    a = monte_carlo(3, 3, 5000, seed=1)
    b = monte_carlo(3, 3, 5000, seed=2)
    assert a.rank_histogram != b.rank_histogram


def test_worker_count_does_not_change_the_result():
    one = monte_carlo(3, 2, 1050, seed=11, workers=1, settings=SMALL_BLOCKS)
    four = monte_carlo(3, 2, 1050, seed=11, workers=4, settings=SMALL_BLOCKS)
    assert one.rank_histogram == four.rank_histogram


def test_table_and_unrank_paths_agree():
    table = monte_carlo(3, 3, 500, seed=5, settings=SMALL_BLOCKS)
    unranked = monte_carlo(3, 3, 500, seed=5, settings=Settings(mc_block_size=100, table_limit=1))
    assert table.rank_histogram == unranked.rank_histogram


def test_unrank_path_on_a_large_semigroup():
    report = monte_carlo(12, 2, 300, seed=3)
    assert sum(report.rank_histogram) == 300
    assert len(report.rank_histogram) == 13


def test_single_point_estimate():
    report = monte_carlo(1, 2, 10**5, seed=2024)
    assert abs(float(report.empirical[0]) - 0.75) < 0.01
    assert report.reference.mass()[0] == Fraction(3, 4)
    assert report.max_abs_deviation < Fraction(1, 100)


def test_is0_has_one_outcome():
    report = monte_carlo(0, 3, 10, seed=0)
    assert report.rank_histogram == (10,)
    assert report.passed()


@pytest.mark.slow
def test_estimate_within_four_sigma():
    report = monte_carlo(3, 2, 10**6, seed=20240601, workers=4)
    assert report.passed()


def test_rows():
    report = monte_carlo(2, 2, 100, seed=9)
    rows = list(report.rows())
    assert [r['rank'] for r in rows] == [0, 1, 2]
    assert sum(r['count'] for r in rows) == 100
    assert rows[0]['exact'] == Fraction(21, 49)


@pytest.mark.parametrize('kwargs', [
    dict(n=-1, k=2, trials=10, seed=0),
    dict(n=2, k=0, trials=10, seed=0),
    dict(n=2, k=2, trials=0, seed=0),
    dict(n=2, k=2, trials=10, seed=-1),
    dict(n=2, k=2, trials=10, seed=SEED_LIMIT),
    dict(n=2, k=2, trials=10, seed=0, workers=0),
])
def test_argument_validation(kwargs):
    with pytest.raises(ValueError):
        monte_carlo(**kwargs)
