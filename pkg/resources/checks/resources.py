"""
Модуль с командой проверки наборов законов
"""
import click

from configs import section
from enums import CheckStatus, OutputFormat, SuiteName
from models.trees import render
from resources.checks.schemas import CheckReportSchema
from resources.utils import EXIT_FAILED, FORMAT_OPTION, command_errors
from services.checks.runner import run_suite
from services.registry import parse_corruption


@click.command('check')
@click.argument('suite', type=click.Choice([suite.value for suite in SuiteName]))
@click.option('--order', type=click.IntRange(min=0), default=None, help='наибольший порядок перебора')
@click.option('--jobs', type=click.IntRange(min=1), default=None, help='число процессов')
@click.option('--corrupt', default=None, metavar='NAME[:TREE]', help='проверить с испорченным отображением')
@FORMAT_OPTION
@command_errors
def run_check(suite: str, order: int, jobs: int, corrupt: str, fmt: str):
    """
    Проверка набора законов SUITE; код выхода 1 при нарушении
    """
    jobs = jobs or section('checks').get('jobs', 1)
    corruption = parse_corruption(corrupt) if corrupt else None
    report = run_suite(SuiteName(suite), order, jobs, corruption)

    if OutputFormat(fmt) is OutputFormat.JSON:
        click.echo(CheckReportSchema().dumps(report.dump(), ensure_ascii=False))
    else:
        if report.corruption is not None:
            name, tree = report.corruption
            click.echo(f'# испорчено {name.value}' + ('' if tree is None else f' на {render(tree)}'))
        for result in report.results:
            if result.status is CheckStatus.FAILED:
                click.echo(f'FAIL  {result.suite.value}/{result.name} ({result.failures}/{result.cases})')
                click.echo(f'      {result.counterexample}')
            elif result.status is CheckStatus.XFAIL:
                click.echo(f'xfail {result.suite.value}/{result.name} ({result.failures}/{result.cases})')
                click.echo(f'      {result.counterexample}')
            else:
                click.echo(f'ok    {result.suite.value}/{result.name} ({result.cases})')
        click.echo(f'{len(report.results) - len(report.failed)} из {len(report.results)} законов выполнены')

    if not report.passed:
        click.get_current_context().exit(EXIT_FAILED)
