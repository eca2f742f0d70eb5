# pinj
# SPDX-License-Identifier: MIT
import csv
import io
import json

import numpy as np
import pytest

from pinj import products
from pinj.cli import build_parser, run

WORKED = '(1,7,2,4)[3,5,10][9,6][8]'


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_count_field_json():
    code, out = invoke('count', '--n', '3', '--field', 'card_is')
    assert code == 0
    assert json.loads(out) == '34'


def test_count_field_text():
    code, out = invoke('count', '--n', '3', '--field', 'card_is', '--format', 'text')
    assert code == 0
    assert out == '34\n'


def test_count_all_fields():
    code, out = invoke('count', '--n', '2')
    data = json.loads(out)
    assert code == 0
    assert data['n'] == 2
    assert data['card_t'] == '3'
    assert data['r'] == ['1', '4', '2']


def test_decompose_worked_example():
    code, out = invoke('decompose', '--n', '10', '--chart', WORKED)
    data = json.loads(out)
    assert code == 0
    assert data['chart'] == WORKED
    assert (data['rank'], data['defect'], data['stable_rank']) == (7, 3, 4)
    assert data['is_nilpotent'] is False
    assert data['cycles'] == [[1, 7, 2, 4]]
    assert data['chain_type']['chain_counts'] == [1, 1, 1, 0, 0, 0, 0, 0, 0, 0]


def test_decompose_from_json_element():
    code, out = invoke('decompose', '--element', '{"n": 3, "map": [2, 3, null]}')
    assert code == 0
    assert json.loads(out)['nilpotency_index'] == 3


def test_decompose_csv():
    code, out = invoke('decompose', '--n', '10', '--chart', WORKED, '--format', 'csv')
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert rows[0]['chart'] == WORKED
    assert rows[0]['cycle_counts'] == '0 0 0 1 0 0 0 0 0 0'


def test_compose_reads_left_to_right():
    code, out = invoke('compose', '--n', '3', '--pairs', '[[1, 2]]', '--pairs', '[[2, 3]]')
    assert code == 0
    assert json.loads(out)['map'] == [3, None, None]


def test_compose_power():
    code, out = invoke('compose', '--n', '3', '--chart', '(1,2,3)', '--power', '3')
    assert code == 0
    assert json.loads(out)['chart'] == '(1)(2)(3)'


def test_verify_all():
    code, out = invoke('verify', '--n', '5', '--all')
    assert code == 0
    assert json.loads(out)['passed'] is True


def test_verify_one_identity_with_spectral_checks():
    code, out = invoke('verify', '--n', '3', '--identity', 'domain-dependence',
                       '--spectral', '--format', 'text')
    assert code == 0
    assert out.startswith('pass\tdomain-dependence')
    assert '\tinclusion-exclusion' in out


def test_bijection_sweeps():
    code, out = invoke('bijection', '--n', '3')
    assert code == 0
    names = [s['name'] for s in json.loads(out)]
    assert 'permpart_chain_map' in names


def test_bijection_by_defect():
    code, out = invoke('bijection', '--n', '3', '--name', 'lah_defect_map', '--k', '2')
    assert code == 0
    assert json.loads(out)[0]['k'] == 2


@pytest.mark.parametrize('method', ['exact', 'spectral', 'brute'])
def test_distribution_methods_agree(method):
    code, out = invoke('distribution', '--n', '2', '--k', '2', '--method', method)
    assert code == 0
    assert json.loads(out)['p'] == [{'num': '3', 'den': '7'},
                                    {'num': '6', 'den': '49'},
                                    {'num': '2', 'den': '49'}]


def test_distribution_checks():
    code, out = invoke('distribution', '--n', '3', '--k', '3', '--check')
    assert code == 0
    assert json.loads(out)['checks']['passed'] is True


def test_simulate_is_deterministic():
    argv = ('simulate', '--n', '2', '--k', '2', '--trials', '500', '--seed', '42')
    first, second = invoke(*argv), invoke(*argv)
    assert first == second
    data = json.loads(first[1])
    assert data['sample']['seed'] == '42'
    assert sum(int(c) for c in data['sample']['rank_histogram']) == 500


def test_simulate_draws_a_seed(capsys):
    code, out = invoke('simulate', '--n', '1', '--k', '2', '--trials', '10')
    assert code == 0
    assert capsys.readouterr().err.startswith('seed ')


@pytest.mark.parametrize('argv', [
    ('asymptotics', '--n', '40'),
    ('asymptotics', '--n', '40', '--report', 'unimodality'),
    ('asymptotics', '--n', '20', '--m', '3'),
])
def test_asymptotics(argv):
    code, out = invoke(*argv)
    assert code == 0
    assert json.loads(out)['checks']['passed'] is True


@pytest.mark.parametrize('argv', [
    ('asymptotics', '--n', '5', '--m', '1'),
    ('asymptotics', '--n', '0', '--m', '2'),
])
def test_asymptotics_mod_edge_cases_succeed(argv):
    code, out = invoke(*argv)
    assert code == 0
    assert json.loads(out)['checks']['passed'] is True


def test_asymptotics_mod_needs_m():
    code, _ = invoke('asymptotics', '--report', 'mod')
    assert code == 2


@pytest.mark.parametrize('argv', [
    ('count',),
    ('count', '--n', '-1'),
    ('simulate', '--n', '2', '--k', '2', '--trials', '10', '--seed', str(2 ** 64)),
    ('decompose', '--chart', '(1,2)'),
    ('decompose', '--n', '3', '--chart', '(1,2)'),
    ('decompose', '--n', '3', '--chart', '(1,2'),
    ('distribution', '--n', '4', '--k', '3', '--method', 'brute', '--budget', '10'),
])
def test_usage_errors(argv):
    code, _ = invoke(*argv)
    assert code == 2


def test_budget_flag_reaches_enumeration():
    code, out = invoke('verify', '--n', '4', '--budget', '100')
    assert code == 0
    results = json.loads(out)['results']
    assert all(r['enumerated'] is None for r in results)


def test_parser_lists_every_subcommand():
    help_text = build_parser().format_help()
    for command in ('decompose', 'compose', 'count', 'verify', 'bijection',
                    'distribution', 'simulate', 'asymptotics'):
        assert command in help_text


def test_uneven_brute_force_counts_fail_the_run(monkeypatch):
    table = np.zeros((7, 7), dtype=np.int64)
    table[0, 0] = 1
    monkeypatch.setattr(products, 'composition_table', lambda n: table)
    code, out = invoke('distribution', '--n', '2', '--k', '2', '--method', 'brute')
    assert code == 1
    assert out == ''
