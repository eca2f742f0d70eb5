# pinj
# SPDX-License-Identifier: MIT
import pytest

from pinj import config
from pinj.enumeration import enumerate_elements
from pinj.errors import BudgetExceeded
from pinj.identities import Oracle
from pinj.products import brute_force_distribution
from pinj.sampler import monte_carlo


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    """A working directory with no pinj.toml and no pinj variables set."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv('PINJ_CONFIG', raising=False)
    monkeypatch.delenv('PINJ_BUDGET', raising=False)
    return tmp_path


def test_defaults(workdir):
    assert config.load() == config.Settings()


def test_file_then_environment_then_arguments(workdir, monkeypatch):
    (workdir / 'pinj.toml').write_text('[pinj]\nenumeration_budget = 50\ntuple_budget = 60\n')
    assert config.load().enumeration_budget == 50
    monkeypatch.setenv('PINJ_BUDGET', '40')
    settings = config.load()
    assert (settings.enumeration_budget, settings.tuple_budget) == (40, 60)
    assert config.load(enumeration_budget=30, tuple_budget=None).enumeration_budget == 30


def test_config_path_from_environment(workdir, monkeypatch):
    (workdir / 'other.toml').write_text('[pinj]\nmc_block_size = 7\n')
    monkeypatch.setenv('PINJ_CONFIG', str(workdir / 'other.toml'))
    assert config.load().mc_block_size == 7


def test_bad_values(workdir, monkeypatch):
    monkeypatch.setenv('PINJ_BUDGET', 'lots')
    with pytest.raises(ValueError):
        config.load()
    with pytest.raises(ValueError):
        config.load(environ={}, config_path=None, tuple_budget=0)


def test_environment_budget_reaches_enumeration(workdir, monkeypatch):
    monkeypatch.setenv('PINJ_BUDGET', '10')
    with pytest.raises(BudgetExceeded):
        enumerate_elements(4)
    assert Oracle().budget == 10


def test_file_budget_reaches_brute_force(workdir):
    (workdir / 'pinj.toml').write_text('[pinj]\ntuple_budget = 5\n')
    with pytest.raises(BudgetExceeded) as e:
        brute_force_distribution(2, 1)
    assert e.value.required == 7


def test_file_settings_reach_the_sampler(workdir):
    (workdir / 'pinj.toml').write_text('[pinj]\nmc_block_size = 3\ntable_limit = 1\n')
    configured = monte_carlo(2, 2, trials=50, seed=7)
    explicit = monte_carlo(2, 2, trials=50, seed=7,
                           settings=config.Settings(mc_block_size=3, table_limit=1))
    assert configured.rank_histogram == explicit.rank_histogram
