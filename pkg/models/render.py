"""
Текстовое представление элементов: ASCII и LaTeX
"""
from fractions import Fraction
from functools import total_ordering
from typing import List, Tuple, Union

from enums import AlgebraTag, OutputFormat
from models.elements import ALPHA_TAGS, AlgebraElement, Key, TensorElement, Word, word_degree
from models.trees import Tree, render, render_latex, v_wrap


@total_ordering
class _Descending:
    __slots__ = ('tree',)

    def __init__(self, tree: Tree):
        self.tree = tree

    def __eq__(self, other):
        return self.tree == other.tree

    def __lt__(self, other):
        return other.tree < self.tree


def word_sort_key(tag: AlgebraTag, word: Word) -> tuple:
    """
    Порядок слов при выводе: по убыванию порядка, затем короткие слова раньше,
    затем буквы по убыванию канонического порядка
    """
    return -word_degree(tag, word), len(word), tuple(_Descending(letter) for letter in word)


def term_sort_key(tags: Tuple[AlgebraTag, ...], key: Key) -> tuple:
    return tuple(word_sort_key(tag, word) for tag, word in zip(tags, key))


def sorted_terms(x: Union[AlgebraElement, TensorElement]) -> List[Tuple[Key, Fraction]]:
    """
    Слагаемые тензора (или элемента алгебры как тензора с одним слотом) в порядке вывода
    """
    x = TensorElement.lift(x)
    return sorted(x.terms.items(), key=lambda item: term_sort_key(x.tags, item[0]))


def display_tree(tag: AlgebraTag, letter: Tree) -> Tree:
    """
    Дерево, которым изображается буква: для H^alpha буква u изображается образующей V(u)
    """
    return v_wrap(letter) if tag in ALPHA_TAGS else letter


def render_word(tag: AlgebraTag, word: Word, fmt: OutputFormat = OutputFormat.ASCII) -> str:
    if fmt is OutputFormat.LATEX:
        if not word:
            return r'\|'
        return ' '.join(render_latex(display_tree(tag, letter)) for letter in word)

    if not word:
        return '1'
    return ' '.join(render(display_tree(tag, letter)) for letter in word)


def _render_coeff(value: Fraction, fmt: OutputFormat) -> str:
    if value == 1:
        return ''
    if value.denominator == 1:
        text = str(value.numerator)
    elif fmt is OutputFormat.LATEX:
        text = rf'\frac{{{value.numerator}}}{{{value.denominator}}}'
    else:
        text = f'{value.numerator}/{value.denominator}'

    return text + (r'\, ' if fmt is OutputFormat.LATEX else ' ')


def render_element(x: Union[AlgebraElement, TensorElement], fmt: OutputFormat = OutputFormat.ASCII) -> str:
    """
    Запись элемента: слагаемые через " + "/" - ", слоты через " (x) " или " \\otimes "

    :param x: элемент алгебры или тензор
    :param fmt: ascii или latex
    """
    fmt = OutputFormat(fmt)
    tags = TensorElement.lift(x).tags
    separator = r' \otimes ' if fmt is OutputFormat.LATEX else ' (x) '

    parts = []
    for key, coeff in sorted_terms(x):
        body = _render_coeff(abs(coeff), fmt) + separator.join(
            render_word(tag, word, fmt) for tag, word in zip(tags, key))
        if not parts:
            parts.append(('-' if coeff < 0 else '') + body)
        else:
            parts.append(('- ' if coeff < 0 else '+ ') + body)

    return ' '.join(parts) if parts else '0'
