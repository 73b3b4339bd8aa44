"""
Модельные характеры с воспроизводимыми случайными значениями
"""
from random import Random
from typing import Optional

from enums import AlgebraTag, RingKind
from models.characters import Character
from models.ring import make_ring
from models.trees import trees_up_to, v_wrap
from services.series.sampling import random_fraction, random_ring_value


def make_toy_character(tag: AlgebraTag, seed: int, kind: RingKind = RingKind.SCALAR, d: int = 4,
                       order: int = 4, label: Optional[str] = None) -> Character:
    """
    Характер со случайными рациональными значениями на всех буквах порядка до order.

    На H^alpha значения - случайные рациональные числа, умноженные на единицу кольца:
    иные матричные значения Character на H^alpha отвергает.

    :param tag: алгебра-источник
    :param seed: зерно генератора
    :param kind: scalar или matrix
    :param d: размер матриц
    :param order: наибольший порядок буквы (для H^alpha - порядок образующей V(u))
    :param label: метка q
    """
    tag = AlgebraTag(tag)
    ring = make_ring(kind, d)
    rng = Random(f'{tag.value}:{RingKind(kind).value}:{seed}')
    if tag in (AlgebraTag.H_ALPHA, AlgebraTag.H_ALPHA_NC):
        values = {v_wrap(u): ring.coerce(random_fraction(rng)) for u in trees_up_to(order - 1)}
    else:
        values = {tree: random_ring_value(rng, ring) for tree in trees_up_to(order, start=1)}

    return Character(tag, values, ring, label)


def toy_characters(seed: int, kind: RingKind = RingKind.SCALAR, d: int = 4, order: int = 4):
    """
    Набор (U^gamma, U^e, C^gamma, C^e): U в кольце kind, контрчлены скалярные

    :param seed: зерно
    :param kind: кольцо значений U
    :param d: размер матриц
    :param order: наибольший порядок деревьев
    """
    return (make_toy_character(AlgebraTag.H_GAMMA, seed, kind, d, order, label='q'),
            make_toy_character(AlgebraTag.H_E, seed, kind, d, order, label='q'),
            make_toy_character(AlgebraTag.H_ALPHA, seed, RingKind.SCALAR, 1, order),
            make_toy_character(AlgebraTag.H_E, seed + 1, RingKind.SCALAR, 1, order))
