"""
Элементы алгебр и тензоров: арифметика, разбор и запись
"""
from fractions import Fraction

import pytest

from enums import AlgebraTag, OutputFormat
from models.elements import (AlgebraElement, TensorElement, abelianize, basis_words, embed_tree, grade_components,
                             parse_element, parse_tensor, slot_multiply, tensor, words_of_degree)
from models.render import render_element
from models.trees import ALIASES, E, Y
from tests.strategies import ALPHA, ALPHA_NC, ELECTRON, GAMMA
from utils import TagMismatchError, TreeSyntaxError


DEUXUN, DEUXDEUX = ALIASES['deuxun'], ALIASES['deuxdeux']


def test_free_algebra_is_noncommutative():
    y, d = embed_tree(ELECTRON, Y), embed_tree(ELECTRON, DEUXUN)
    assert y * d != d * y
    assert (y * d).terms == {(Y, DEUXUN): 1}


def test_charge_algebra_is_commutative():
    y, d = embed_tree(ALPHA, Y), embed_tree(ALPHA, DEUXDEUX)
    assert y * d == d * y
    # в H^alpha дерево раскладывается по образующим: deuxun = V(e) / V(e)
    assert embed_tree(ALPHA, DEUXUN) == embed_tree(ALPHA, Y) * embed_tree(ALPHA, Y)


def test_root_is_unit():
    for tag in AlgebraTag:
        assert embed_tree(tag, E) == AlgebraElement.unit(tag)
        assert AlgebraElement.unit(tag).counit() == 1


def test_linear_operations():
    x = parse_element('2 Y - 1/2 deuxun', GAMMA)
    y = parse_element('Y + deuxun', GAMMA)
    assert x + y == parse_element('3 Y + 1/2 deuxun', GAMMA)
    assert x - x == 0
    assert -x == parse_element('-2 Y + 1/2 deuxun', GAMMA)
    assert Fraction(2) * y == parse_element('2 Y + 2 deuxun', GAMMA)
    assert 0 * y == AlgebraElement.zero(GAMMA)


def test_tag_mismatch():
    with pytest.raises(TagMismatchError):
        embed_tree(GAMMA, Y) + embed_tree(ELECTRON, Y)
    with pytest.raises(TagMismatchError):
        embed_tree(GAMMA, Y) * embed_tree(ALPHA, Y)
    with pytest.raises(TagMismatchError):
        tensor([embed_tree(GAMMA, Y)]) + tensor([embed_tree(ELECTRON, Y)])


def test_degree_and_components():
    x = parse_element('Y Y + deuxun - troisun', ELECTRON)
    components = grade_components(x)
    assert sorted(components) == [2, 3]
    assert components[2].degree() == 2
    assert x.degree() is None


def test_tensor_and_slot_multiply():
    x = tensor([embed_tree(ELECTRON, Y), embed_tree(ALPHA, Y), embed_tree(ELECTRON, DEUXUN)])
    assert x.tags == (ELECTRON, ALPHA, ELECTRON)
    product = slot_multiply(x, 1, 3, 1)
    assert product.tags == (ELECTRON, ALPHA)
    assert product.terms == {((Y, DEUXUN), (E,)): 1}
    reversed_product = slot_multiply(x, 3, 1, 2)
    assert reversed_product.terms == {((E,), (DEUXUN, Y)): 1}
    with pytest.raises(TagMismatchError):
        slot_multiply(x, 1, 2, 1)


def test_contract_and_swap():
    x = parse_tensor('Y (x) 1 + 1 (x) Y', (ELECTRON, ELECTRON))
    assert x.swap() == x
    assert x.contract(2) == parse_tensor('Y', (ELECTRON,))


def test_abelianize():
    x = parse_tensor('Y deuxdeux (x) 1 - deuxdeux Y (x) 1', (ALPHA_NC, ALPHA_NC))
    assert x
    assert not abelianize(x)


def test_words_of_degree():
    # размерности однородных компонент H^e: 1, 1, 3, 10, 35
    assert [len(words_of_degree(ELECTRON, n)) for n in range(5)] == [1, 1, 3, 10, 35]
    # H^alpha: мономы от образующих V(u) степени |u| + 1 - разбиения с каталановыми весами
    assert [len(words_of_degree(ALPHA, n)) for n in range(5)] == [1, 1, 2, 4, 10]
    assert len(basis_words(GAMMA, 2)) == 1 + 1 + 3


def test_parse_with_slots():
    x = parse_tensor('2 deuxun (x) Y (x) 1 - 1/3 Y (x) 1 (x) Y', (ELECTRON, ALPHA, ELECTRON))
    assert x.coefficient(((DEUXUN,), (E,), ())) == 2
    assert x.coefficient(((Y,), (), (Y,))) == Fraction(-1, 3)
    with pytest.raises(TreeSyntaxError):
        parse_tensor('Y (x) Y', (ELECTRON,))
    with pytest.raises(TreeSyntaxError):
        parse_element('Y +', ELECTRON)


def test_render_order_and_signs():
    x = parse_tensor('1 (x) Y - 1/2 Y (x) 1', (ALPHA, ALPHA))
    assert render_element(x) == '-1/2 (e v e) (x) 1 + 1 (x) (e v e)'
    assert render_element(AlgebraElement.zero(GAMMA)) == '0'
    assert render_element(AlgebraElement.unit(GAMMA)) == '1'
    latex = render_element(x, OutputFormat.LATEX)
    assert r'\frac{1}{2}' in latex and r'\otimes' in latex


def test_render_alpha_letters_as_generators():
    # буква u алгебры H^alpha изображается деревом V(u)
    x = embed_tree(ALPHA, ALIASES['troisquatre'])
    assert render_element(x) == '(e v ((e v e) v e))'
    assert parse_element(render_element(x), ALPHA) == x


def test_tensor_requires_slot_count():
    with pytest.raises(TagMismatchError):
        TensorElement((ELECTRON, ELECTRON), {((Y,),): 1})
