"""
Копроизведения обрезания Delta^p_gamma, Delta^p_e, двойственные произведениям / и \\
"""
from fractions import Fraction
from threading import RLock
from typing import Dict, Optional, Tuple

from cachetools import cached

from enums import AlgebraTag
from logger import get_logger
from main.cache import make_cache
from models.elements import TensorElement
from models.trees import E, Tree, decompose_over, decompose_under, graft, under_word_tree, word_tree
from services.hopf.base import Image, MultiplicativeMap
from utils import DomainError


LOGGER = get_logger(__name__)

TreePairs = Dict[Tuple[Tree, Tree], int]


def _pair_image(pairs: TreePairs) -> Image:
    return {(tuple(t for t in (left,) if not t.is_root), tuple(t for t in (right,) if not t.is_root)): Fraction(c)
            for (left, right), c in pairs.items()}


def over_factorizations(tree: Tree) -> TreePairs:
    """
    Все разложения t = t1 / t2 через свободные образующие (Y, /)
    """
    arguments = decompose_over(tree)
    return {(word_tree(arguments[:i]), word_tree(arguments[i:])): 1 for i in range(len(arguments) + 1)}


def under_factorizations(tree: Tree) -> TreePairs:
    """
    Все разложения t = t1 \\ t2 через свободные образующие (Y, \\)
    """
    arguments = decompose_under(tree)
    return {(under_word_tree(arguments[:i]), under_word_tree(arguments[i:])): 1 for i in range(len(arguments) + 1)}


@cached(make_cache(), lock=RLock())
def pruning_gamma_recursive(tree: Tree) -> TreePairs:
    """
    Delta(t v s) = t v s (x) e + sum t' (x) (t'' v s) по Delta(t)
    """
    if tree.is_root:
        return {(E, E): 1}

    pairs = {(tree, E): 1}
    for (left, right), coeff in pruning_gamma_recursive(tree.left).items():
        key = (left, graft(right, tree.right))
        pairs[key] = pairs.get(key, 0) + coeff

    return pairs


@cached(make_cache(), lock=RLock())
def pruning_e_recursive(tree: Tree) -> TreePairs:
    """
    Delta(t v s) = e (x) t v s + sum (t v s') (x) s'' по Delta(s)
    """
    if tree.is_root:
        return {(E, E): 1}

    pairs = {(E, tree): 1}
    for (left, right), coeff in pruning_e_recursive(tree.right).items():
        key = (graft(tree.left, left), right)
        pairs[key] = pairs.get(key, 0) + coeff

    return pairs


class PruningCoproduct(MultiplicativeMap):
    """
    Копроизведение обрезания на свободной алгебре деревьев: на дереве сумма по всем разложениям
    t = t1 / t2 (H^gamma) или t = t1 \\ t2 (H^e), на словах - мультипликативное продолжение
    """

    def __init__(self, tag: AlgebraTag, recursive: bool = False, name: Optional[str] = None,
                 cache_size: Optional[int] = None):
        MultiplicativeMap.__init__(self, name, cache_size)
        if tag not in (AlgebraTag.H_GAMMA, AlgebraTag.H_E):
            raise DomainError(f'Копроизведение обрезания не определено на {tag.value}')
        self.tag = tag
        self.recursive = recursive
        self.source = (tag,)
        self.target = (tag, tag)

    def factorizations(self, tree: Tree) -> TreePairs:
        if self.tag is AlgebraTag.H_GAMMA:
            return pruning_gamma_recursive(tree) if self.recursive else over_factorizations(tree)
        return pruning_e_recursive(tree) if self.recursive else under_factorizations(tree)

    def letter_image(self, letter: Tree) -> Image:
        return _pair_image(self.factorizations(letter))


def reduced_pruning(tree: Tree, coproduct: PruningCoproduct) -> TensorElement:
    """
    Оператор обрезания P(t) = Delta(t) - t (x) 1 - 1 (x) t

    :param tree: дерево порядка не меньше 1
    :param coproduct: копроизведение обрезания
    """
    if tree.is_root:
        raise DomainError('Оператор обрезания определён только на деревьях t != e')

    image = coproduct.letter(tree)
    return TensorElement._raw(coproduct.target, {key: c for key, c in image.items() if key[0] and key[1]})


def compare_recursive(tree: Tree) -> bool:
    """
    Совпадение рекурсивного и факторизационного определений обоих копроизведений на дереве
    """
    same = over_factorizations(tree) == pruning_gamma_recursive(tree) \
        and under_factorizations(tree) == pruning_e_recursive(tree)
    if not same:
        LOGGER.error('Рекурсивное копроизведение обрезания расходится с факторизацией на %r', tree)

    return same
