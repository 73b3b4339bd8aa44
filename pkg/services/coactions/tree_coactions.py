"""
Кодействия delta^gamma и delta^e алгебры заряда на алгебрах пропагаторов
"""
from fractions import Fraction
from threading import RLock
from typing import Dict, Optional, Tuple

from cachetools import cached

from enums import AlgebraTag
from main.cache import make_cache
from models.elements import Word, normalize_word
from models.trees import E, Tree, decompose_over, graft, word_tree
from services.hopf.base import Image, MultiplicativeMap
from services.hopf.charge import nc_coaction_word, nc_coproduct_word
from utils import DomainError


ALPHA = AlgebraTag.H_ALPHA

TreeCoactionTerms = Dict[Tuple[Tree, Word], Fraction]


def single_tree_coaction(tree: Tree) -> TreeCoactionTerms:
    """
    delta~(t), прочитанное через H~^alpha = CY: левое слово становится одним деревом, правое абелизуется
    """
    terms: TreeCoactionTerms = {}
    for (left, right), coeff in nc_coaction_word(tuple(decompose_over(tree))).items():
        key = (word_tree(left), normalize_word(ALPHA, right))
        value = terms.get(key, 0) + coeff
        if value:
            terms[key] = value
        else:
            terms.pop(key, None)

    return terms


@cached(make_cache(), lock=RLock())
def coaction_recursive(tree: Tree) -> TreeCoactionTerms:
    """
    delta(t v s) = sum t' v s_(e) (x) t'' / s_(alpha) по Delta^alpha(t) и delta(s)
    """
    if tree.is_root:
        return {(E, ()): Fraction(1)}

    terms: TreeCoactionTerms = {}
    for (left, right), coeff in nc_coproduct_word(tuple(decompose_over(tree.left))).items():
        for (s_tree, s_alpha), s_coeff in coaction_recursive(tree.right).items():
            key = (graft(word_tree(left), s_tree), normalize_word(ALPHA, right + s_alpha))
            value = terms.get(key, 0) + coeff * s_coeff
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)

    return terms


class TreeCoaction(MultiplicativeMap):
    """
    Кодействие delta^gamma: H^gamma -> H^gamma (x) H^alpha или delta^e: H^e -> H^e (x) H^alpha,
    на деревьях совпадает с delta~, на словах мультипликативно
    """

    def __init__(self, tag: AlgebraTag, recursive: bool = False, name: Optional[str] = None,
                 cache_size: Optional[int] = None):
        MultiplicativeMap.__init__(self, name, cache_size)
        if tag not in (AlgebraTag.H_GAMMA, AlgebraTag.H_E):
            raise DomainError(f'Кодействие заряда не определено на {tag.value}')
        self.tag = tag
        self.recursive = recursive
        self.source = (tag,)
        self.target = (tag, ALPHA)

    def letter_image(self, letter: Tree) -> Image:
        terms = coaction_recursive(letter) if self.recursive else single_tree_coaction(letter)
        return {(normalize_word(self.tag, (left,)), right): coeff for (left, right), coeff in terms.items()}
