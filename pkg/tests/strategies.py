"""
Стратегии hypothesis и короткие конструкторы элементов для тестов
"""
from hypothesis import strategies as st

from enums import AlgebraTag
from models.elements import parse_element, parse_tensor
from models.trees import trees_up_to


GAMMA, ELECTRON, ALPHA, ALPHA_NC = AlgebraTag.H_GAMMA, AlgebraTag.H_E, AlgebraTag.H_ALPHA, AlgebraTag.H_ALPHA_NC


def trees(max_order: int, min_order: int = 0):
    """
    Дерево порядка min_order..max_order
    """
    return st.sampled_from(list(trees_up_to(max_order, min_order)))


def element(text: str, tag: AlgebraTag):
    return parse_element(text, tag)


def tensor_of(text: str, *tags: AlgebraTag):
    return parse_tensor(text, tags)
