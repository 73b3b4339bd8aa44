"""
Сверка вывода CLI с эталонными файлами tests/golden побайтно
"""
from pathlib import Path

import pytest
from click.testing import CliRunner
from yaml import Loader, load

from main.app import create_app


GOLDEN = Path(__file__).parent / 'golden'

with open(GOLDEN / 'index.yaml', encoding='utf-8') as index_file:
    INDEX = load(index_file, Loader)


def _invocations(entry: dict):
    command = entry['command']
    if 'trees' not in entry:
        return [command]
    return [command[:2] + [tree] + command[2:] for tree in entry['trees']]


def regenerate(entry: dict) -> str:
    runner = CliRunner(mix_stderr=False)
    app = create_app()
    chunks = []
    for argv in _invocations(entry):
        result = runner.invoke(app, argv)
        assert result.exit_code == 0, (argv, result.stderr)
        chunks.append(result.output)
    return ''.join(chunks)


@pytest.mark.parametrize('name', sorted(INDEX))
def test_golden_output(name):
    expected = (GOLDEN / name).read_text(encoding='utf-8')
    assert regenerate(INDEX[name]) == expected


def test_index_covers_golden_files():
    files = {path.name for path in GOLDEN.iterdir() if path.name != 'index.yaml'}
    assert files == set(INDEX)
