"""
Модуль с командами перечисления деревьев
"""
import click

from enums import OutputFormat
from models.trees import enumerate_trees, render, render_latex
from resources.trees.schemas import EnumerationSchema
from resources.utils import FORMAT_OPTION, command_errors


@click.command('enum')
@click.argument('n', type=click.IntRange(min=0))
@click.option('--count-only', is_flag=True, help='вывести только число деревьев')
@FORMAT_OPTION
@command_errors
def enum_trees(n: int, count_only: bool, fmt: str):
    """
    Деревья порядка N в каноническом порядке с номерами
    """
    trees = enumerate_trees(n)
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        data = {'order': n, 'count': len(trees), 'trees': [] if count_only else trees}
        click.echo(EnumerationSchema().dumps(data, ensure_ascii=False))
        return
    if count_only:
        click.echo(len(trees))
        return

    show = render_latex if fmt is OutputFormat.LATEX else render
    for index, tree in enumerate(trees, start=1):
        click.echo(f'{index}\t{show(tree)}')
