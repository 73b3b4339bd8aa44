"""
Характеры, перенормировка пропагаторов и формулы Дайсона
"""
from fractions import Fraction

import pytest

from enums import AlgebraTag, RingKind
from models.characters import Character, PropagatorExpansion, evaluate
from models.elements import embed_tree, parse_tensor
from models.ring import MatrixRing
from models.series import TruncatedSeries
from models.trees import E, Y, lookup, over, trees_up_to, v_wrap
from services.enums import MapName
from services.registry import default_registry
from services.renormalization.pipeline import (duality_mismatches, dyson_check_electron, dyson_check_photon,
                                               pair_evaluate, renormalization_triviality, renormalized_electron,
                                               renormalized_photon, z2_series, z3_series)
from services.renormalization.toy import make_toy_character, toy_characters
from tests.strategies import ALPHA, ALPHA_NC, ELECTRON, GAMMA
from utils import CharacterError


ORDER = 4


def ones(tag: AlgebraTag, order: int = ORDER) -> Character:
    if tag is ALPHA:
        return Character(tag, {v_wrap(u): 1 for u in trees_up_to(order - 1)})
    return Character(tag, {t: 1 for t in trees_up_to(order, start=1)})


def test_character_values():
    character = Character(ELECTRON, {Y: 2, lookup('deuxun'): Fraction(1, 3)})
    assert character.word((Y, Y)) == 4
    assert evaluate(character, embed_tree(ELECTRON, lookup('deuxun')) + embed_tree(ELECTRON, Y)) == Fraction(7, 3)


def test_character_errors():
    with pytest.raises(CharacterError):
        Character(ALPHA, {lookup('deuxun'): 1})
    with pytest.raises(CharacterError):
        Character(GAMMA, {E: 2})
    ring = MatrixRing(2)
    with pytest.raises(CharacterError):
        Character(ALPHA_NC, {Y: [[0, 1], [0, 0]], lookup('deuxdeux'): [[0, 0], [1, 0]]}, ring)
    with pytest.raises(CharacterError):
        Character(GAMMA, {Y: 1}).word((lookup('deuxun'),))
    with pytest.raises(CharacterError):
        evaluate(Character(GAMMA, {Y: 1}), embed_tree(ELECTRON, Y))


def test_charge_character_rejects_matrix_values():
    ring = MatrixRing(2)
    diagonal = [[1, 0], [0, 2]]
    with pytest.raises(CharacterError):
        Character(ALPHA, {Y: diagonal}, ring)
    with pytest.raises(CharacterError):
        Character(ALPHA, {}, ring, default=diagonal)
    assert Character(ALPHA, {Y: [[3, 0], [0, 3]]}, ring).word((E,)) == ring.coerce(3)
    assert Character(ALPHA_NC, {Y: diagonal}, ring).word((E,)) == ring.coerce(diagonal)

    toy = make_toy_character(ALPHA, 0, RingKind.MATRIX, 2, order=3)
    assert all(ring.is_scalar(toy.word((u,))) for u in trees_up_to(2))


def test_zero_character():
    zero = Character.zero(ALPHA)
    assert zero.word((lookup('deuxun'),)) == 0
    assert zero.word(()) == 1


def test_pair_evaluate():
    x = parse_tensor('2 Y (x) Y + 1 (x) 1', (GAMMA, ALPHA))
    u, c = Character(GAMMA, {Y: 3}), Character(ALPHA, {Y: 5})
    assert pair_evaluate((u, c), x) == 31
    with pytest.raises(CharacterError):
        pair_evaluate((u,), x)
    with pytest.raises(CharacterError):
        pair_evaluate((c, u), x)


def test_expansion_assembly():
    expansion = PropagatorExpansion.from_character(ones(GAMMA), ORDER)
    assert expansion.assemble() == TruncatedSeries([1, 1, 2, 5, 14])
    square = expansion.tree_product(expansion, over)
    assert square[lookup('deuxun')] == 3


def test_counterterm_series():
    assert z3_series(ones(ALPHA), ORDER) == TruncatedSeries([1, -1, -1, -2, -5])
    assert z2_series(ones(ELECTRON), 2) == TruncatedSeries([1, -1, -1])


def test_zero_counterterms_leave_propagators():
    u_gamma, u_e, _, _ = toy_characters(3)
    zero_alpha, zero_e = Character.zero(ALPHA), Character.zero(ELECTRON)
    for tree in trees_up_to(ORDER, start=1):
        assert renormalized_photon(u_gamma, zero_alpha, tree) == u_gamma.word((tree,))
        assert renormalized_electron(u_e, zero_alpha, zero_e, tree) == u_e.word((tree,))
    assert dyson_check_photon(u_gamma, zero_alpha, ORDER).passed
    assert dyson_check_electron(u_e, zero_alpha, zero_e, ORDER).passed


@pytest.mark.parametrize('seed', range(20))
def test_dyson_scalar(seed):
    u_gamma, u_e, c_gamma, c_e = toy_characters(seed, RingKind.SCALAR, order=ORDER)
    photon = dyson_check_photon(u_gamma, c_gamma, ORDER)
    electron = dyson_check_electron(u_e, c_gamma, c_e, ORDER)
    assert photon.passed, photon.first_failure
    assert electron.passed, electron.first_failure
    assert [residual.order for residual in photon.residuals] == list(range(ORDER + 1))


@pytest.mark.parametrize('seed', range(3))
def test_dyson_matrix(seed):
    u_gamma, u_e, c_gamma, c_e = toy_characters(seed, RingKind.MATRIX, d=2, order=3)
    assert dyson_check_photon(u_gamma, c_gamma, 3).passed
    assert dyson_check_electron(u_e, c_gamma, c_e, 3).passed


def test_dyson_detects_corrupted_coaction():
    registry = default_registry().corrupted(MapName.DELTA_GAMMA)
    assert registry.corruption == (MapName.DELTA_GAMMA, lookup('deuxun'))
    report = dyson_check_photon(ones(GAMMA), ones(ALPHA), ORDER, registry)
    assert not report.passed
    assert report.first_failure.order == 2


@pytest.mark.parametrize('seed', range(5))
def test_duality(seed):
    for tag in (GAMMA, ELECTRON):
        character = make_toy_character(tag, seed, RingKind.MATRIX, 2, ORDER)
        assert duality_mismatches(character, ORDER) == []


def test_triviality():
    u_gamma, u_e, _, _ = toy_characters(7, RingKind.MATRIX, d=2, order=3)
    assert renormalization_triviality(u_gamma, u_e, 3) == []
