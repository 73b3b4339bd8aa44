"""
Отображение sigma: H^gamma -> H^alpha и кодействие перенормировки фотона Delta^gamma
"""
from fractions import Fraction
from typing import Optional

from enums import AlgebraTag
from logger import get_logger
from models.elements import TensorElement, letter_word, normalize_word, slot_multiply
from models.trees import Tree, decompose_over, word_tree
from services.hopf.base import Image, MultiplicativeMap, StructureMap, lift_image
from services.hopf.charge import nc_coproduct_word
from utils import TagMismatchError


LOGGER = get_logger(__name__)


class Sigma(MultiplicativeMap):
    """
    Морфизм алгебр sigma(t_1 ... t_n) = t_1 / ... / t_n со значениями в H^alpha
    """

    def __init__(self, name: Optional[str] = None, cache_size: Optional[int] = None):
        MultiplicativeMap.__init__(self, name, cache_size)
        self.source = (AlgebraTag.H_GAMMA,)
        self.target = (AlgebraTag.H_ALPHA,)

    def letter_image(self, letter: Tree) -> Image:
        return {(letter_word(AlgebraTag.H_ALPHA, letter),): Fraction(1)}


class DeltaSigma(StructureMap):
    """
    delta^sigma = m_23 (delta (x) sigma) Delta^p: H^p -> H^p (x) H^c.
    Для (Delta^p_gamma, delta^gamma, sigma) это Delta^gamma
    """

    def __init__(self, coproduct: StructureMap, coaction: StructureMap, sigma: StructureMap,
                 name: Optional[str] = None, cache_size: Optional[int] = None):
        StructureMap.__init__(self, name, cache_size)
        p_tag = coproduct.source[0]
        c_tag = sigma.target[0]
        if coaction.target != (p_tag, c_tag) or sigma.source != (p_tag,):
            raise TagMismatchError(f'{coaction.name} и {sigma.name} не согласованы с {coproduct.name}')
        self.coproduct = coproduct
        self.coaction = coaction
        self.sigma = sigma
        self.source = (p_tag,)
        self.target = (p_tag, c_tag)

    def compute(self, key) -> Image:
        pruned = lift_image(self.coproduct.target, self.coproduct.image(key))
        return slot_multiply(pruned.apply(self.coaction, self.sigma), 2, 3, 2).terms


def charge_coproduct_as_photon(tree: Tree) -> TensorElement:
    """
    Delta~^alpha(t), прочитанное через H~^alpha = CY: левое слово - одно дерево H^gamma, правое абелизуется
    """
    terms = {}
    for (left, right), coeff in nc_coproduct_word(tuple(decompose_over(tree))).items():
        key = (normalize_word(AlgebraTag.H_GAMMA, (word_tree(left),)), normalize_word(AlgebraTag.H_ALPHA, right))
        value = terms.get(key, 0) + coeff
        if value:
            terms[key] = value
        else:
            terms.pop(key, None)

    return TensorElement._raw((AlgebraTag.H_GAMMA, AlgebraTag.H_ALPHA), terms)


def compare_with_charge(delta_gamma: StructureMap, tree: Tree) -> bool:
    """
    Совпадение Delta^gamma(t) с некоммутативным копроизведением заряда на одном дереве
    """
    same = delta_gamma(TensorElement._raw((AlgebraTag.H_GAMMA,), {(letter_word(AlgebraTag.H_GAMMA, tree),):
                                                                   Fraction(1)})) == charge_coproduct_as_photon(tree)
    if not same:
        LOGGER.error('Delta^gamma(%r) расходится с Delta~^alpha', tree)

    return same
