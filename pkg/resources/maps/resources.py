"""
Модуль с командами применения структурных отображений
"""
import click

from enums import AlgebraTag, OutputFormat
from models.elements import parse_tensor
from models.render import render_element
from resources.maps.schemas import MapSchema, dumps_value, load_tensor
from resources.utils import FORMAT_OPTION, command_errors, read_text
from services.registry import default_registry


@click.command('map')
@click.argument('name')
@click.argument('text')
@click.option('--tag', type=click.Choice([tag.value for tag in AlgebraTag]), default=None,
              help='алгебра аргумента для семейств delta-p, antipode-p, coaction')
@FORMAT_OPTION
@command_errors
def apply_map(name: str, text: str, tag: str, fmt: str):
    """
    Применение отображения NAME к элементу TEXT ("-" - чтение из stdin, JSON если начинается с "{")

    Моном H^alpha задаётся деревом или произведением образующих; delta-small вычисляется
    на каноническом представителе монома (образующие отсортированы в каноническом порядке),
    поэтому деревья с одним и тем же набором образующих дают один образ.
    """
    structure_map = default_registry().resolve(name, AlgebraTag(tag) if tag else None)
    text = read_text(text)
    if text.lstrip().startswith('{'):
        x = load_tensor(text, structure_map.source)
    else:
        x = parse_tensor(text, structure_map.source)

    image = x.apply(structure_map)
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        click.echo(dumps_value(image))
    else:
        click.echo(render_element(image, fmt))


@click.command('maps')
@FORMAT_OPTION
@command_errors
def list_maps(fmt: str):
    """
    Список отображений с алгебрами источника и образа
    """
    described = [{'name': name, 'signature': signature} for name, signature in default_registry().describe()]
    if OutputFormat(fmt) is OutputFormat.JSON:
        click.echo(MapSchema(many=True).dumps(described, ensure_ascii=False))
        return
    width = max(len(item['name']) for item in described)
    for item in described:
        click.echo(f'{item["name"]:<{width}}  {item["signature"]}')
