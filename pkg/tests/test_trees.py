"""
Деревья: прививка, произведения / и \\, перечисление, имена и запись
"""
import pytest
from hypothesis import given

from models.parsing import parse
from models.trees import (ALIASES, E, Y, decompose_over, decompose_under, enumerate_trees, graft, lookup, over,
                          render, render_latex, tree_index, trees_up_to, un_graft, under, under_word_tree, v_wrap,
                          word_tree)
from tests.strategies import trees
from utils import DomainError, TreeSyntaxError, catalan


def test_small_trees():
    assert E.is_root and E.order == 0
    assert Y == graft(E, E) == v_wrap(E)
    assert Y.order == 1
    assert un_graft(ALIASES['deuxun']) == (Y, E)
    with pytest.raises(DomainError):
        un_graft(E)


@pytest.mark.parametrize('left, right, product, expected', [
    ('deuxdeux', 'Y', over, 'troisdeux'),
    ('Y', 'deuxdeux', over, 'troistrois'),
    ('deuxun', 'Y', under, 'troistrois'),
    ('Y', 'deuxun', under, 'troisquatre'),
    ('Y', 'Y', over, 'deuxun'),
    ('Y', 'Y', under, 'deuxdeux'),
])
def test_products_on_small_trees(left, right, product, expected):
    assert product(lookup(left), lookup(right)) == lookup(expected)


@given(trees(4), trees(3), trees(3))
def test_products_are_associative(a, b, c):
    assert over(over(a, b), c) == over(a, over(b, c))
    assert under(under(a, b), c) == under(a, under(b, c))


@given(trees(5))
def test_root_is_unit_and_orders_add(t):
    assert over(E, t) == t == over(t, E)
    assert under(E, t) == t == under(t, E)
    assert over(t, Y).order == under(t, Y).order == t.order + 1


@given(trees(6))
def test_generator_decompositions_are_inverse(t):
    arguments = decompose_over(t)
    assert word_tree(arguments) == t
    assert under_word_tree(decompose_under(t)) == t
    # t = V(u_1) / ... / V(u_k): порядок складывается из |u_i| + 1
    assert sum(u.order + 1 for u in arguments) == t.order


def test_over_generators_of_deuxun():
    assert decompose_over(ALIASES['deuxun']) == [E, E]
    assert decompose_over(ALIASES['troisquatre']) == [ALIASES['deuxun']]
    assert decompose_under(ALIASES['deuxdeux']) == [E, E]


@pytest.mark.parametrize('n', range(13))
def test_catalan_counts(n):
    assert len(enumerate_trees(n)) == catalan(n)


def test_enumeration_of_order_three():
    names = ['troisun', 'troisdeux', 'troistrois', 'troisquatre', 'troiscinq']
    assert list(enumerate_trees(3)) == [ALIASES[name] for name in names]
    assert [t.name for t in enumerate_trees(3)] == [f'Y3.{k}' for k in range(1, 6)]


@pytest.mark.parametrize('n', range(6))
def test_enumeration_is_sorted(n):
    listed = list(enumerate_trees(n))
    assert listed == sorted(listed)
    assert len(set(listed)) == len(listed)


def test_negative_order():
    with pytest.raises(DomainError):
        enumerate_trees(-1)


@given(trees(6))
def test_render_and_names_round_trip(t):
    assert parse(render(t)) == t
    assert lookup(t.name) == t
    assert tree_index(t) >= 1


def test_render_forms():
    assert render(E) == 'e'
    assert render(ALIASES['deuxdeux']) == '(e v (e v e))'
    assert render_latex(Y) == r'(\| \vee \|)'
    assert parse('deuxun') == parse('((e v e) v e)') == lookup('Y2.1')
    assert parse('Y3.4') == ALIASES['troisquatre']


@pytest.mark.parametrize('text', ['(e v e', 'e v e', '(e e)', 'Z', ''])
def test_parse_errors(text):
    with pytest.raises(TreeSyntaxError):
        parse(text)


@pytest.mark.parametrize('name', ['Y3.6', 'Y3.0', 'foo', 'Y.1'])
def test_lookup_errors(name):
    with pytest.raises(DomainError):
        lookup(name)


def test_trees_up_to_counts():
    assert len(list(trees_up_to(4))) == sum(catalan(n) for n in range(5))
    assert next(iter(trees_up_to(3, start=1))) == Y
