"""
Команды CLI: enum, map, maps, check, renorm
"""
import json

import pytest
from click.testing import CliRunner

from enums import AlgebraTag
from main.app import create_app
from models.elements import parse_tensor
from resources.maps.schemas import load_tensor
from tests.strategies import tensor_of


HE, HALPHA = AlgebraTag.H_E, AlgebraTag.H_ALPHA


@pytest.fixture(scope='module')
def app():
    return create_app()


@pytest.fixture()
def runner():
    return CliRunner(mix_stderr=False)


def test_enum(app, runner):
    result = runner.invoke(app, ['enum', '3'])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 5
    assert lines[0] == '1\t(((e v e) v e) v e)'
    assert lines[3] == '4\t(e v ((e v e) v e))'


def test_enum_root_and_counts(app, runner):
    assert runner.invoke(app, ['enum', '0']).output == '1\te\n'
    assert runner.invoke(app, ['enum', '12', '--count-only']).output.strip() == '208012'
    assert runner.invoke(app, ['enum', '-1']).exit_code == 2


def test_enum_json(app, runner):
    data = json.loads(runner.invoke(app, ['enum', '2', '--format', 'json']).output)
    assert data['count'] == 2
    assert [tree['name'] for tree in data['trees']] == ['Y2.1', 'Y2.2']
    assert data['trees'][1]['text'] == '(e v (e v e))'


def test_map_on_unit(app, runner):
    result = runner.invoke(app, ['map', 'delta-alpha', 'e'])
    assert result.exit_code == 0
    assert result.output.strip() == '1 (x) 1'


def test_map_electron_coaction(app, runner):
    result = runner.invoke(app, ['map', 'delta-e', 'deuxun'])
    assert result.exit_code == 0
    assert result.output.strip() == \
        '((e v e) v e) (x) 1 (x) 1 + (e v e) (x) (e v e) (x) 1 + 1 (x) 1 (x) ((e v e) v e)'


def test_map_family_with_tag(app, runner):
    result = runner.invoke(app, ['map', 'delta-p', 'deuxdeux', '--tag', 'he'])
    assert result.exit_code == 0
    assert parse_tensor(result.output.strip(), (HE, HE)) == tensor_of('deuxdeux (x) 1 + Y (x) Y + 1 (x) deuxdeux', HE, HE)


def test_map_json_round_trip(app, runner):
    payload = json.dumps({'tag': 'halpha', 'terms': [{'coeff': '2', 'word': ['(e v e)']}]})
    result = runner.invoke(app, ['map', 'delta-alpha', payload, '--format', 'json'])
    assert result.exit_code == 0
    assert load_tensor(result.output, (HALPHA, HALPHA)) == tensor_of('2 Y (x) 1 + 2 1 (x) Y', HALPHA, HALPHA)
    data = json.loads(result.output)
    assert data['tags'] == ['halpha', 'halpha']
    assert {'coeff': '2', 'slots': [['(e v e)'], []]} in data['terms']


def test_map_tensor_json_input(app, runner):
    payload = json.dumps({'tags': ['halpha'], 'terms': [{'coeff': '2', 'slots': [['(e v e)']]}]})
    result = runner.invoke(app, ['map', 'delta-alpha', payload])
    assert result.exit_code == 0
    assert parse_tensor(result.output.strip(), (HALPHA, HALPHA)) == tensor_of('2 Y (x) 1 + 2 1 (x) Y', HALPHA, HALPHA)


def test_map_json_single_slot_is_element(app, runner):
    result = runner.invoke(app, ['map', 'antipode-p-e', 'deuxdeux', '--format', 'json'])
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        'tag': 'he',
        'terms': [{'coeff': '-1', 'word': ['(e v (e v e))']},
                  {'coeff': '1', 'word': ['(e v e)', '(e v e)']}],
    }
    assert load_tensor(result.output, (HE,)) == tensor_of('-deuxdeux + Y Y', HE)


def test_map_from_stdin(app, runner):
    result = runner.invoke(app, ['map', 'antipode-p-e', '-'], input='deuxdeux\n')
    assert result.exit_code == 0
    assert parse_tensor(result.output.strip(), (HE,)) == tensor_of('-deuxdeux + Y Y', HE)


def test_map_charge_coaction_representative(app, runner):
    help_text = ' '.join(runner.invoke(app, ['map', '--help']).output.split())
    assert 'каноническом представителе' in help_text
    images = {runner.invoke(app, ['map', 'delta-small', tree]).output for tree in ('troisdeux', 'troistrois')}
    assert len(images) == 1


@pytest.mark.parametrize('args', [
    ['map', 'no-such-map', 'Y'],
    ['map', 'delta-p', 'Y'],
    ['map', 'delta-alpha', '(e v e'],
    ['map', 'delta-alpha', '{"tags": ["he"], "terms": []}'],
    ['map', 'delta-alpha', '{"tags": ["halpha"], "terms": [{"coeff": "x", "slots": [["e"]]}]}'],
])
def test_map_errors(app, runner, args):
    result = runner.invoke(app, args)
    assert result.exit_code == 2
    assert 'Ошибка' in result.stderr


def test_maps(app, runner):
    result = runner.invoke(app, ['maps'])
    assert result.exit_code == 0
    assert any(line.startswith('delta-qed') for line in result.output.splitlines())
    names = [item['name'] for item in json.loads(runner.invoke(app, ['maps', '--format', 'json']).output)]
    assert 'photon-semidirect-coaction' in names


def test_check_passes(app, runner):
    result = runner.invoke(app, ['check', 'trees', '--order', '2'])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == '6 из 6 законов выполнены'
    assert 'ok    trees/graft-ungraft' in result.output


def test_check_with_corruption_fails(app, runner):
    result = runner.invoke(app, ['check', 'coassoc', '--order', '2', '--corrupt', 'delta-alpha'])
    assert result.exit_code == 1
    assert result.output.splitlines()[0] == '# испорчено delta-alpha на (e v ((e v e) v e))'
    assert 'FAIL  coassoc/coassociativity[delta-alpha]' in result.output


def test_check_json(app, runner):
    result = runner.invoke(app, ['check', 'counts', '--order', '2', '--format', 'json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['status'] == 'passed'
    assert data['corruption'] is None
    assert [law['law'] for law in data['laws']] == ['catalan', 'pruning-term-count', 'he-basis-count']


def test_check_bad_corruption(app, runner):
    result = runner.invoke(app, ['check', 'coassoc', '--corrupt', 'delta-alpha:e'])
    assert result.exit_code == 2


def test_renorm_zero_counterterms(app, runner):
    result = runner.invoke(app, ['renorm', '--order', '3', '--zero-counterterms'])
    assert result.exit_code == 0
    assert 'photon: passed (N=3)' in result.output
    assert 'electron: passed (N=3)' in result.output


def test_renorm_formats(app, runner):
    result = runner.invoke(app, ['renorm', '--order', '3', '--seed', '5', '--format', 'json'])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['status'] == 'passed'
    assert [r['value'] for r in data['photon']['per_order_residuals']] == ['0'] * 4
    assert data['photon']['lhs']['N'] == 3
    assert 'order' not in data['photon']['lhs']
    latex = runner.invoke(app, ['renorm', '--order', '2', '--format', 'latex']).output
    assert latex.startswith('\\begin{align*}')


def test_renorm_matrix(app, runner):
    result = runner.invoke(app, ['renorm', '--order', '2', '--ring', 'matrix', '--d', '2'])
    assert result.exit_code == 0
    assert '  alpha^1: [0 0; 0 0]' in result.output


def test_renorm_character_files(app, runner, tmp_path):
    exported = tmp_path / 'characters.json'
    first = runner.invoke(app, ['renorm', '--order', '3', '--seed', '2', '--export-characters', str(exported)])
    assert first.exit_code == 0
    tables = json.loads(exported.read_text(encoding='utf-8'))
    assert set(tables) == {'u_gamma', 'u_e', 'c_gamma', 'c_e'}
    second = runner.invoke(app, ['renorm', '--order', '3', '--characters', str(exported)])
    assert second.exit_code == 0
    assert second.output == first.output

    tables['c_gamma']['values'] = {'((e v e) v e)': '1'}
    broken = tmp_path / 'broken.json'
    broken.write_text(json.dumps(tables), encoding='utf-8')
    result = runner.invoke(app, ['renorm', '--order', '3', '--characters', str(broken)])
    assert result.exit_code == 2
