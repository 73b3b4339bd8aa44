"""
Реестр отображений: поиск по имени и семейству, порча
"""
import pytest

from enums import AlgebraTag
from models.elements import embed_tree
from models.parsing import parse
from models.trees import E, lookup, trees_up_to
from services.enums import MapName
from services.registry import MapRegistry, default_registry, parse_corruption
from tests.strategies import ALPHA, tensor_of
from utils import DomainError


def test_all_maps_are_built(registry):
    assert registry.names() == [name.value for name in MapName]
    signatures = dict(registry.describe())
    assert signatures['delta-e'] == 'he -> he (x) halpha (x) he'
    assert signatures['delta-qed'] == 'halpha (x) he -> halpha (x) he (x) halpha (x) he'


def test_default_registry_is_shared():
    assert default_registry() is default_registry()
    assert isinstance(default_registry(), MapRegistry)


@pytest.mark.parametrize('family, tag, expected', [
    ('delta-p', AlgebraTag.H_GAMMA, MapName.DELTA_P_GAMMA),
    ('delta-p', AlgebraTag.H_E, MapName.DELTA_P_E),
    ('antipode-p', AlgebraTag.H_E, MapName.ANTIPODE_P_E),
    ('coaction', AlgebraTag.H_GAMMA, MapName.COACTION_GAMMA),
])
def test_resolve_family(registry, family, tag, expected):
    assert registry.resolve(family, tag) is registry[expected]


def test_resolve_errors(registry):
    with pytest.raises(DomainError):
        registry.resolve('delta-p')
    with pytest.raises(DomainError):
        registry.resolve('delta-p', AlgebraTag.H_ALPHA)
    with pytest.raises(DomainError):
        registry.resolve('no-such-map')
    with pytest.raises(DomainError):
        registry.resolve('delta-alpha', AlgebraTag.H_E)
    assert registry.resolve('delta-alpha', AlgebraTag.H_ALPHA) is registry[MapName.DELTA_ALPHA]


@pytest.mark.parametrize('text, expected', [
    ('delta-alpha', (MapName.DELTA_ALPHA, None)),
    ('delta-alpha:troisquatre', (MapName.DELTA_ALPHA, lookup('troisquatre'))),
    ('antipode-p-e:(e v (e v e))', (MapName.ANTIPODE_P_E, lookup('deuxdeux'))),
    ('delta-e:Y2.1', (MapName.DELTA_E, lookup('deuxun'))),
])
def test_parse_corruption(text, expected):
    assert parse_corruption(text) == expected


def test_parse_corruption_errors():
    with pytest.raises(DomainError):
        parse_corruption('nothing:Y')


@pytest.mark.parametrize('name, victim', [
    (MapName.DELTA_ALPHA, 'troisquatre'),
    (MapName.ANTIPODE_P_E, 'deuxdeux'),
    (MapName.DELTA_GAMMA, 'deuxun'),
])
def test_default_victims(registry, name, victim):
    corrupted = registry.corrupted(name)
    assert corrupted.corruption == (name, lookup(victim))


def test_corruption_replaces_one_map(registry):
    corrupted = registry.corrupted(MapName.DELTA_P_E, lookup('deuxdeux'))
    assert corrupted[MapName.DELTA_P_E] is not registry[MapName.DELTA_P_E]
    assert corrupted[MapName.DELTA_QED] is registry[MapName.DELTA_QED]
    x = embed_tree(AlgebraTag.H_E, lookup('deuxdeux'))
    genuine, broken = registry[MapName.DELTA_P_E](x), corrupted[MapName.DELTA_P_E](x)
    assert len(genuine) - len(broken) == 1
    # исходный реестр не изменился
    assert registry[MapName.DELTA_P_E](x) == genuine


def test_corruption_after_warm_cache(registry):
    x = embed_tree(AlgebraTag.H_ALPHA, lookup('troisquatre'))
    for tree in trees_up_to(5, 1):
        if tree.left.is_root:
            registry[MapName.DELTA_ALPHA](embed_tree(AlgebraTag.H_ALPHA, tree))
    genuine = registry[MapName.DELTA_ALPHA](x)

    broken = registry.corrupted(MapName.DELTA_ALPHA)[MapName.DELTA_ALPHA](x)
    assert broken != genuine
    assert genuine - broken == tensor_of('deuxdeux (x) Y', ALPHA, ALPHA)
    assert registry[MapName.DELTA_ALPHA](x) == genuine


def test_corrupted_antipode_after_warm_cache(registry):
    x = embed_tree(AlgebraTag.H_E, lookup('deuxdeux'))
    genuine = registry[MapName.ANTIPODE_P_E](x)
    broken = registry.corrupted(MapName.ANTIPODE_P_E)[MapName.ANTIPODE_P_E](x)
    assert len(genuine) - len(broken) == 1


def test_corruption_needs_a_tree(registry):
    with pytest.raises(DomainError):
        registry.corrupted(MapName.DELTA_P_E, E)
    with pytest.raises(DomainError):
        registry.corrupted(MapName.DELTA_ALPHA, parse('deuxun'))
