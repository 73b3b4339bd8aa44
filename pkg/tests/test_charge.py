"""
Алгебра заряда H^alpha: копроизведение Delta^alpha, кодействие delta и некоммутативный подъём
"""
import pytest
from hypothesis import given

from enums import SuiteName
from models.elements import AlgebraElement, EMPTY, TensorElement, abelianize, basis_keys, embed_tree, slot_multiply
from models.trees import lookup, trees_up_to
from services.checks.laws import CheckContext, build_laws
from services.enums import MapName
from tests.strategies import ALPHA, ALPHA_NC, element, tensor_of, trees


@pytest.mark.parametrize('tree, expected', [
    ('Y', 'Y (x) 1 + 1 (x) Y'),
    ('deuxdeux', 'deuxdeux (x) 1 + 1 (x) deuxdeux'),
    ('troisquatre', 'troisquatre (x) 1 + deuxdeux (x) Y + 1 (x) troisquatre'),
    ('troiscinq', 'troiscinq (x) 1 + 1 (x) troiscinq'),
])
def test_charge_coproduct_table(registry, tree, expected):
    image = registry[MapName.DELTA_ALPHA](embed_tree(ALPHA, lookup(tree)))
    assert image == tensor_of(expected, ALPHA, ALPHA)


@pytest.mark.parametrize('tree, expected', [
    ('Y', 'Y (x) 1'),
    ('deuxdeux', 'deuxdeux (x) 1'),
    ('troisquatre', 'troisquatre (x) 1 + deuxdeux (x) Y'),
    ('troiscinq', 'troiscinq (x) 1'),
])
def test_charge_coaction_table(registry, tree, expected):
    image = registry[MapName.DELTA_SMALL](embed_tree(ALPHA, lookup(tree)))
    assert image == tensor_of(expected, ALPHA, ALPHA)


def test_unit_images(registry):
    unit = AlgebraElement.unit(ALPHA)
    assert registry[MapName.DELTA_ALPHA](unit) == TensorElement.unit((ALPHA, ALPHA))
    assert registry[MapName.DELTA_SMALL](unit) == TensorElement.unit((ALPHA, ALPHA))


@given(t=trees(6, 1))
def test_primitive_pairing(registry, t):
    word = embed_tree(ALPHA, t)
    image = registry[MapName.DELTA_ALPHA](word)
    (key,) = word.terms
    assert image.coefficient((key, EMPTY)) == 1
    assert image.coefficient((EMPTY, key)) == 1


@pytest.mark.parametrize('name', [MapName.DELTA_ALPHA, MapName.DELTA_ALPHA_NC])
def test_coassociativity(registry, name):
    coproduct = registry[name]
    for key in basis_keys(coproduct.source, 4):
        image = TensorElement.lift(AlgebraElement.basis(coproduct.source[0], key[0])).apply(coproduct)
        assert image.apply(coproduct, None) == image.apply(None, coproduct)


@pytest.mark.parametrize('name', [MapName.DELTA_ALPHA, MapName.DELTA_ALPHA_NC])
def test_counit(registry, name):
    coproduct = registry[name]
    for key in basis_keys(coproduct.source, 4):
        x = TensorElement.lift(AlgebraElement.basis(coproduct.source[0], key[0]))
        image = x.apply(coproduct)
        assert image.contract(1) == x
        assert image.contract(2) == x


def test_noncommutative_coaction_law(registry):
    coaction, coproduct = registry[MapName.DELTA_SMALL_NC], registry[MapName.DELTA_ALPHA_NC]
    for t in trees_up_to(5):
        x = TensorElement.lift(embed_tree(ALPHA_NC, t))
        image = x.apply(coaction)
        assert image.apply(coaction, None) == image.apply(None, coproduct)


def test_abelian_projection_of_lift(registry):
    for t in trees_up_to(5):
        nc = registry[MapName.DELTA_ALPHA_NC](embed_tree(ALPHA_NC, t))
        assert abelianize(nc) == registry[MapName.DELTA_ALPHA](embed_tree(ALPHA, t))


@pytest.mark.parametrize('antipode_name, coproduct_name', [
    (MapName.ANTIPODE_ALPHA, MapName.DELTA_ALPHA),
    (MapName.ANTIPODE_ALPHA_NC, MapName.DELTA_ALPHA_NC),
])
def test_antipode_axiom(registry, antipode_name, coproduct_name):
    antipode, coproduct = registry[antipode_name], registry[coproduct_name]
    tag = coproduct.source[0]
    for (word,) in basis_keys((tag,), 4):
        image = coproduct(AlgebraElement.basis(tag, word)).apply(antipode, None)
        expected = AlgebraElement.unit(tag) if not word else AlgebraElement.zero(tag)
        assert slot_multiply(image, 1, 2, 1).squeeze() == expected


def test_charge_antipode_on_generator(registry):
    antipode = registry[MapName.ANTIPODE_ALPHA]
    assert antipode(embed_tree(ALPHA, lookup('troisquatre'))) == element('-troisquatre + deuxdeux Y', ALPHA)


@pytest.mark.parametrize('tree', ['troisdeux', 'troistrois'])
def test_charge_coaction_on_canonical_representative(registry, tree):
    # оба дерева дают моном Y deuxdeux, delta считается на отсортированном слове
    image = registry[MapName.DELTA_SMALL](embed_tree(ALPHA, lookup(tree)))
    assert image == tensor_of('Y deuxdeux (x) 1 + deuxdeux (x) Y', ALPHA, ALPHA)


def test_charge_coaction_law(registry):
    laws = {law.name: law for law in build_laws(CheckContext(registry, 3), SuiteName.COACTION)}
    law = laws['coaction[delta-small]']
    assert not law.expected_failure
    assert (EMPTY,) in law.cases
    assert [key for key in law.cases if law.check(key) is not None] == []
