"""
Алгебра Хопфа заряда H^alpha, её некоммутативный подъём H~^alpha и кодействие delta
"""
from fractions import Fraction
from threading import RLock
from typing import Optional

from cachetools import cached

from enums import AlgebraTag
from main.cache import make_cache
from models.elements import EMPTY, Word, normalize_word
from models.trees import Tree, decompose_over, word_tree
from services.hopf.base import Image, MultiplicativeMap, StructureMap, multiply_images


NC = AlgebraTag.H_ALPHA_NC
NC_PAIR = (NC, NC)

_LOCK = RLock()


@cached(make_cache(), lock=_LOCK)
def nc_coproduct_letter(argument: Tree) -> Image:
    """
    Delta~(V(u)) = 1 (x) V(u) + delta~(V(u))
    """
    image = dict(nc_coaction_generator(argument))
    key = (EMPTY, (argument,))
    image[key] = image.get(key, 0) + 1

    return image


@cached(make_cache(), lock=_LOCK)
def nc_coproduct_word(word: Word) -> Image:
    """
    Delta~ на слове образующих - произведение образов букв в H~^alpha (x) H~^alpha
    """
    if not word:
        return {(EMPTY, EMPTY): Fraction(1)}

    return multiply_images(NC_PAIR, nc_coproduct_word(word[:-1]), nc_coproduct_letter(word[-1]))


@cached(make_cache(), lock=_LOCK)
def nc_coaction_generator(argument: Tree) -> Image:
    """
    delta~(V(u)) = (V (x) Id) delta~(u): левое слово читается как дерево и оборачивается в V
    """
    image: Image = {}
    for (left, right), coeff in nc_coaction_word(tuple(decompose_over(argument))).items():
        key = ((word_tree(left),), right)
        image[key] = image.get(key, 0) + coeff

    return image


@cached(make_cache(), lock=_LOCK)
def nc_coaction_word(word: Word) -> Image:
    """
    delta~(t v s) = Delta~(t) delta~(V(s)); слово [u_1..u_k] - это дерево V(u_1)/.../V(u_k)
    """
    if not word:
        return {(EMPTY, EMPTY): Fraction(1)}

    return multiply_images(NC_PAIR, nc_coproduct_word(word[:-1]), nc_coaction_generator(word[-1]))


def abelian_image(image: Image) -> Image:
    """
    Проекция образа H~^alpha (x) H~^alpha на H^alpha (x) H^alpha
    """
    result: Image = {}
    for key, coeff in image.items():
        key = tuple(normalize_word(AlgebraTag.H_ALPHA, word) for word in key)
        value = result.get(key, 0) + coeff
        if value:
            result[key] = value
        else:
            result.pop(key, None)

    return result


class ChargeCoproduct(MultiplicativeMap):
    """
    Копроизведение заряда: Delta^alpha на H^alpha или Delta~^alpha на H~^alpha, задано на образующих V(u)
    """

    def __init__(self, commutative: bool = True, name: Optional[str] = None, cache_size: Optional[int] = None):
        MultiplicativeMap.__init__(self, name, cache_size)
        tag = AlgebraTag.H_ALPHA if commutative else NC
        self.commutative = commutative
        self.source = (tag,)
        self.target = (tag, tag)

    def letter_image(self, letter: Tree) -> Image:
        image = nc_coproduct_letter(letter)
        return abelian_image(image) if self.commutative else image


class ChargeCoaction(StructureMap):
    """
    Кодействие delta. На H~^alpha определено рекурсией по последней образующей слова;
    на мономе H^alpha вычисляется на каноническом представителе (образующие в каноническом порядке)
    с последующей абелизацией
    """

    def __init__(self, commutative: bool = True, name: Optional[str] = None, cache_size: Optional[int] = None):
        StructureMap.__init__(self, name, cache_size)
        tag = AlgebraTag.H_ALPHA if commutative else NC
        self.commutative = commutative
        self.source = (tag,)
        self.target = (tag, tag)

    def compute(self, key) -> Image:
        (word,) = key
        image = nc_coaction_word(word)
        return abelian_image(image) if self.commutative else image
