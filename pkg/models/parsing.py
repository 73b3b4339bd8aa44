"""
Грамматика текстовой записи деревьев и элементов алгебр (pyparsing)
"""
from collections import namedtuple
from fractions import Fraction
from typing import List

from pyparsing import Forward, Group, Keyword, Literal, MatchFirst, OneOrMore, Opt, ParseBaseException, Regex, \
    StringEnd, Suppress, ZeroOrMore, FollowedBy, one_of

from models.trees import ALIASES, E, Tree, graft, lookup
from utils import TreeSyntaxError


ParsedTerm = namedtuple('ParsedTerm', ('coeff', 'slots'))


def _build_grammar():
    tree = Forward()

    root = Keyword('e').set_parse_action(lambda: [E])
    name = MatchFirst([Regex(r'Y\d+\.\d+')] + [Keyword(alias) for alias in sorted(ALIASES, key=len, reverse=True)])
    name.set_parse_action(lambda toks: [lookup(toks[0])])
    grafted = Suppress('(') + tree + Suppress(Keyword('v')) + tree + Suppress(')')
    grafted.set_parse_action(lambda toks: [graft(toks[0], toks[1])])
    tree <<= root | name | grafted

    coeff = Regex(r'\d+(/\d+)?')
    unit = Regex(r'1(?![\d/])').set_parse_action(lambda: [])
    slot = Group(unit | OneOrMore(tree))
    slots = Group(slot + ZeroOrMore(Suppress(Literal('(x)')) + slot))

    term = (Opt(coeff('coeff') + Opt(Suppress('*')) + FollowedBy(slot)) + slots('slots')) | coeff('coeff')
    term.set_parse_action(_term_action)
    sign = one_of('+ -')
    element = Opt(sign) + term + ZeroOrMore(sign + term) + StringEnd()

    return tree + StringEnd(), element


def _term_action(toks):
    coeff = Fraction(toks.coeff) if toks.coeff else Fraction(1)
    slots = [list(slot) for slot in toks.slots] if toks.slots else None

    return [ParsedTerm(coeff, slots)]


TREE_GRAMMAR, ELEMENT_GRAMMAR = _build_grammar()


def parse(text: str) -> Tree:
    """
    Разбор текстовой записи дерева

    :param text: "e", "(l v r)" либо имя дерева ("Y3.2", "deuxun", ...)
    """
    try:
        return TREE_GRAMMAR.parse_string(text)[0]
    except ParseBaseException as error:
        raise TreeSyntaxError(f'Не удалось разобрать дерево {text!r}: {error}') from error


def parse_terms(text: str) -> List[ParsedTerm]:
    """
    Разбор линейной комбинации тензорных мономов.

    Слоты разделяются "(x)", буквы слота - деревья через пробел, "1" - пустое слово.
    Слагаемое без слотов (только коэффициент) имеет slots = None.

    :param text: запись элемента
    """
    try:
        tokens = ELEMENT_GRAMMAR.parse_string(text)
    except ParseBaseException as error:
        raise TreeSyntaxError(f'Не удалось разобрать элемент {text!r}: {error}') from error

    terms = []
    sign = 1
    for token in tokens:
        if isinstance(token, ParsedTerm):
            terms.append(ParsedTerm(sign * token.coeff, token.slots))
            sign = 1
        else:
            sign = -1 if token == '-' else 1

    return terms
