"""
Модуль с общим функционалом пакета CLI ресурсов
"""
from fractions import Fraction
from functools import wraps

import click
from marshmallow import ValidationError, fields

from enums import OutputFormat
from logger import get_logger
from models.ring import MatrixRing
from utils import AlgebraError, format_fraction, to_fraction


LOGGER = get_logger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2

FORMAT_OPTION = click.option('--format', 'fmt', type=click.Choice([fmt.value for fmt in OutputFormat]),
                             default=OutputFormat.ASCII.value, show_default=True, help='формат вывода')


class FractionField(fields.Field):
    """
    Точное рациональное число строкой "p/q" ("n" для целых)
    """

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return format_fraction(Fraction(value))

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return to_fraction(str(value))
        except AlgebraError as error:
            raise ValidationError(str(error)) from error


class RingValueField(FractionField):
    """
    Элемент кольца: скаляр "p/q" либо матрица - список строк из таких чисел
    """

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None or isinstance(value, (int, Fraction)):
            return FractionField._serialize(self, value, attr, obj, **kwargs)
        return MatrixRing(value.shape[0]).dump(value)

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, list):
            return FractionField._deserialize(self, value, attr, data, **kwargs)
        if any(not isinstance(row, list) or len(row) != len(value) for row in value):
            raise ValidationError('Матрица должна быть квадратной')
        try:
            return MatrixRing(len(value)).coerce(value)
        except AlgebraError as error:
            raise ValidationError(str(error)) from error


def read_text(text: str) -> str:
    """
    Аргумент команды; "-" означает чтение из stdin
    """
    if text == '-':
        return click.get_text_stream('stdin').read().strip()
    return text


def command_errors(command):
    """
    Декоратор команды: вызов пишется в лог, ошибки ввода печатаются в stderr с кодом выхода 2
    """
    @wraps(command)
    def wrapper(*args, **kwargs):
        LOGGER.info('Команда %s %s', command.__name__, kwargs)
        try:
            return command(*args, **kwargs)
        except (AlgebraError, ValidationError) as error:
            LOGGER.error('Команда %s: %s', command.__name__, error)
            click.echo(f'Ошибка: {error}', err=True)
            click.get_current_context().exit(EXIT_USAGE)

    return wrapper
