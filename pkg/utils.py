"""
Модуль с общими функциями проекта
"""
from fractions import Fraction
from math import comb
from typing import Union


Scalar = Fraction


def catalan(n: int) -> int:
    """
    Число Каталана c_n = (2n)! / (n! (n+1)!)

    :param n: порядок
    """
    return comb(2 * n, n) // (n + 1)


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    """
    Приведение коэффициента к точному рациональному числу

    :param value: целое, строка вида "p/q" или дробь
    """
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as error:
        raise DomainError(f'Некорректный коэффициент {value!r}') from error


def format_fraction(value: Fraction) -> str:
    """
    строка вида "p/q" или "n" для целых
    """
    if value.denominator == 1:
        return str(value.numerator)

    return f'{value.numerator}/{value.denominator}'


class AlgebraError(Exception):
    default_detail = 'Algebra error'
    detail = ''

    def __init__(self, detail=None):
        if detail is None:
            detail = self.default_detail

        self.detail = detail

    def __str__(self):
        return str(self.detail)


class TagMismatchError(AlgebraError):
    default_detail = 'Операнды принадлежат разным алгебрам'


class DomainError(AlgebraError):
    default_detail = 'Аргумент вне области определения'


class TreeSyntaxError(AlgebraError):
    default_detail = 'Текст не является деревом или элементом алгебры'


class CharacterError(AlgebraError):
    default_detail = 'Недопустимый характер'


class RingError(AlgebraError):
    default_detail = 'Несовместимые элементы кольца'
