"""
Полупрямое (smash) копроизведение H^c x| H^p, его антипод и кодействие на H^p
"""
from fractions import Fraction
from threading import RLock
from typing import Dict, Optional, Tuple

from cachetools import cached

from enums import AlgebraTag
from main.cache import make_cache
from models.elements import EMPTY, TensorElement, Word, normalize_word, slot_multiply, tensor
from models.trees import E, Tree, decompose_over, graft, word_tree
from services.hopf.base import Image, StructureMap, lift_image
from services.hopf.charge import nc_coproduct_word
from utils import DomainError, TagMismatchError


class RestrictedCoaction(StructureMap):
    """
    Кодействие (delta (x) Id) Delta^p: H^p -> H^p (x) H^c (x) H^p (ограничение полупрямого копроизведения на H^p)
    """

    def __init__(self, coproduct: StructureMap, coaction: StructureMap, name: Optional[str] = None,
                 cache_size: Optional[int] = None):
        StructureMap.__init__(self, name, cache_size)
        if coaction.source != coproduct.source:
            raise TagMismatchError(f'{coaction.name} и {coproduct.name} действуют на разных алгебрах')
        self.coproduct = coproduct
        self.coaction = coaction
        self.source = coproduct.source
        self.target = coaction.target + coproduct.source

    def compute(self, key) -> Image:
        pruned = lift_image(self.coproduct.target, self.coproduct.image(key))
        return pruned.apply(self.coaction, None).terms


class SemidirectCoproduct(StructureMap):
    """
    Delta(a (x) b) = Delta^c(a) [(delta (x) Id) Delta^p(b)] со слоями (c, p, c, p):
    a' (x) b'_(p) (x) a'' b'_(c) (x) b''
    """

    def __init__(self, charge: StructureMap, coproduct: StructureMap, coaction: StructureMap,
                 name: Optional[str] = None, cache_size: Optional[int] = None):
        StructureMap.__init__(self, name, cache_size)
        c_tag, p_tag = charge.source[0], coproduct.source[0]
        if coaction.target != (p_tag, c_tag):
            raise TagMismatchError(f'Кодействие {coaction.name} не согласовано с {charge.name} и {coproduct.name}')
        self.charge = charge
        self.restricted = RestrictedCoaction(coproduct, coaction, cache_size=cache_size)
        self.source = (c_tag, p_tag)
        self.target = (c_tag, p_tag, c_tag, p_tag)

    def compute(self, key) -> Image:
        a_word, b_word = key
        charge = lift_image(self.charge.target, self.charge.image((a_word,)))
        restricted = lift_image(self.restricted.target, self.restricted.image((b_word,)))
        # (a', a'', b'_p, b'_c, b'') -> (a', b'_p, a'' b'_c, b'')
        return slot_multiply(tensor([charge, restricted]), 2, 4, 3).terms

    def counit(self, x: TensorElement) -> Fraction:
        """
        eps(a (x) b) = eps(a) eps(b)
        """
        return x.terms.get((EMPTY, EMPTY), Fraction(0))


class SemidirectAntipode(StructureMap):
    """
    S(a (x) b) = S^c(a) [tau (Id (x) S^c) delta(S^p b)], левый множитель коммутативен
    """

    def __init__(self, charge_antipode: StructureMap, antipode: StructureMap, coaction: StructureMap,
                 name: Optional[str] = None, cache_size: Optional[int] = None):
        StructureMap.__init__(self, name, cache_size)
        c_tag, p_tag = charge_antipode.source[0], antipode.source[0]
        if c_tag is not AlgebraTag.H_ALPHA:
            raise DomainError('Полупрямое произведение является биалгеброй только при коммутативной H^c')
        self.charge_antipode = charge_antipode
        self.antipode = antipode
        self.coaction = coaction
        self.source = (c_tag, p_tag)
        self.target = (c_tag, p_tag)

    def compute(self, key) -> Image:
        a_word, b_word = key
        twisted = lift_image(self.antipode.target, self.antipode.image((b_word,)))
        twisted = twisted.apply(self.coaction).apply(None, self.charge_antipode).swap()
        charge = lift_image(self.charge_antipode.target, self.charge_antipode.image((a_word,)))
        left = tensor([charge, TensorElement.unit((self.source[1],))])
        return (left * twisted).terms


ElectronTerms = Dict[Tuple[Tree, Word, Tree], Fraction]


@cached(make_cache(), lock=RLock())
def electron_coaction_recursive(tree: Tree) -> ElectronTerms:
    """
    Delta^e(t v s) = e (x) 1 (x) t v s + sum t' v s_(1) (x) t'' / s_(2) (x) s_(3) по Delta^alpha(t), Delta^e(s)
    """
    if tree.is_root:
        return {(E, (), E): Fraction(1)}

    terms: ElectronTerms = {(E, (), tree): Fraction(1)}
    for (left, right), coeff in nc_coproduct_word(tuple(decompose_over(tree.left))).items():
        for (s_first, s_alpha, s_last), s_coeff in electron_coaction_recursive(tree.right).items():
            key = (graft(word_tree(left), s_first), normalize_word(AlgebraTag.H_ALPHA, right + s_alpha), s_last)
            value = terms.get(key, 0) + coeff * s_coeff
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)

    return terms


def electron_recursive_image(tree: Tree) -> TensorElement:
    """
    Рекурсивное Delta^e(t) как тензор H^e (x) H^alpha (x) H^e
    """
    tags = (AlgebraTag.H_E, AlgebraTag.H_ALPHA, AlgebraTag.H_E)
    return TensorElement(tags, {((first,), alpha, (last,)): coeff
                                for (first, alpha, last), coeff in electron_coaction_recursive(tree).items()})
