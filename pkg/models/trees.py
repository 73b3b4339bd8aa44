"""
Планарные бинарные деревья
"""
from functools import total_ordering
from itertools import chain
from threading import Lock
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from utils import DomainError


@total_ordering
class Tree:
    """
    Планарное бинарное дерево: корень e либо прививка l v r двух деревьев.

    Значение неизменяемо; равенство и хэш структурные, порядок канонический
    (сначала по числу внутренних вершин, затем по порядку левого поддерева по убыванию,
    затем рекурсивно по левому и правому поддеревьям).
    """
    __slots__ = ('left', 'right', 'order', 'key', '_hash')

    def __init__(self, left: Optional['Tree'] = None, right: Optional['Tree'] = None):
        if (left is None) != (right is None):
            raise DomainError('Дерево задаётся либо двумя поддеревьями, либо ни одним')

        self.left = left
        self.right = right
        if left is None:
            self.order = 0
            self.key = (0,)
        else:
            self.order = left.order + right.order + 1
            self.key = (self.order, -left.order, left.key, right.key)
        self._hash = hash(self.key)

    @property
    def is_root(self) -> bool:
        return self.left is None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __lt__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.key < other.key

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        if self.left is None:
            return Tree, ()
        return Tree, (self.left, self.right)

    def __repr__(self):
        return render(self)

    @property
    def name(self) -> str:
        return tree_name(self)


E = Tree()


def graft(left: Tree, right: Tree) -> Tree:
    """
    Прививка двух деревьев к новому корню l v r

    :param left: левое поддерево
    :param right: правое поддерево
    """
    return Tree(left, right)


def un_graft(tree: Tree) -> Tuple[Tree, Tree]:
    """
    Разложение t = t^l v t^r

    :param tree: дерево порядка не меньше 1
    """
    if tree.is_root:
        raise DomainError('Корневое дерево e не раскладывается в прививку')

    return tree.left, tree.right


def v_wrap(tree: Tree) -> Tree:
    """
    Образующая V(t) = e v t
    """
    return Tree(E, tree)


Y = v_wrap(E)


def decompose_over(tree: Tree) -> List[Tree]:
    """
    Аргументы образующих (u_1, ..., u_k), для которых t = V(u_1) / ... / V(u_k)

    :param tree: дерево
    """
    rights = []
    while not tree.is_root:
        rights.append(tree.right)
        tree = tree.left
    rights.reverse()

    return rights


def decompose_under(tree: Tree) -> List[Tree]:
    """
    Аргументы (u_1, ..., u_k), для которых t = (u_1 v e) \\ ... \\ (u_k v e)

    :param tree: дерево
    """
    lefts = []
    while not tree.is_root:
        lefts.append(tree.left)
        tree = tree.right

    return lefts


def word_tree(arguments: Iterable[Tree], start: Tree = E) -> Tree:
    """
    Дерево start / V(u_1) / ... / V(u_k), обратное к decompose_over

    :param arguments: аргументы образующих
    :param start: дерево, к которому прививаются образующие
    """
    tree = start
    for argument in arguments:
        tree = Tree(tree, argument)

    return tree


def under_word_tree(arguments: Sequence[Tree], end: Tree = E) -> Tree:
    """
    Дерево (u_1 v e) \\ ... \\ (u_k v e) \\ end, обратное к decompose_under
    """
    tree = end
    for argument in reversed(arguments):
        tree = Tree(argument, tree)

    return tree


def over(tree: Tree, other: Tree) -> Tree:
    """
    Произведение t / s: дерево t прививается к самому левому листу s

    :param tree: t
    :param other: s
    """
    return word_tree(decompose_over(other), tree)


def under(tree: Tree, other: Tree) -> Tree:
    """
    Произведение t \\ s: s прививается к самому правому листу t
    """
    return under_word_tree(decompose_under(tree), other)


_TREES: Dict[int, Tuple[Tree, ...]] = {0: (E,)}
_INDEX: Dict[int, Dict[Tree, int]] = {}
_LOCK = Lock()


def enumerate_trees(n: int) -> Tuple[Tree, ...]:
    """
    Все деревья порядка n в каноническом порядке, c_n штук

    :param n: порядок деревьев
    """
    if n < 0:
        raise DomainError(f'Порядок дерева не может быть отрицательным: {n}')

    trees = _TREES.get(n)
    if trees is not None:
        return trees

    with _LOCK:
        for m in range(1, n + 1):
            if m in _TREES:
                continue
            _TREES[m] = tuple(Tree(left, right)
                              for lo in range(m - 1, -1, -1)
                              for left in _TREES[lo]
                              for right in _TREES[m - 1 - lo])

    return _TREES[n]


def trees_up_to(n: int, start: int = 0) -> Iterator[Tree]:
    """
    Деревья порядков start..n подряд
    """
    return chain.from_iterable(enumerate_trees(m) for m in range(start, n + 1))


def tree_index(tree: Tree) -> int:
    """
    Номер дерева (с единицы) в каноническом списке деревьев его порядка
    """
    index = _INDEX.get(tree.order)
    if index is None:
        index = {t: k for k, t in enumerate(enumerate_trees(tree.order), start=1)}
        with _LOCK:
            _INDEX[tree.order] = index

    return index[tree]


def tree_name(tree: Tree) -> str:
    """
    Имя вида "Y<n>.<k>"
    """
    return f'Y{tree.order}.{tree_index(tree)}'


# Привычные имена деревьев малых порядков
ALIASES: Dict[str, Tree] = {
    'Y': Y,
    'deuxun': Tree(Y, E),
    'deuxdeux': Tree(E, Y),
}
ALIASES.update({
    'troisun': Tree(ALIASES['deuxun'], E),
    'troisdeux': Tree(ALIASES['deuxdeux'], E),
    'troistrois': Tree(Y, Y),
    'troisquatre': Tree(E, ALIASES['deuxun']),
    'troiscinq': Tree(E, ALIASES['deuxdeux']),
})


def lookup(name: str) -> Tree:
    """
    Дерево по имени "Y<n>.<k>" или по привычному имени

    :param name: имя дерева
    """
    if name in ALIASES:
        return ALIASES[name]

    try:
        order_text, index_text = name[1:].split('.')
        order, index = int(order_text), int(index_text)
        trees = enumerate_trees(order)
        if not name.startswith('Y') or not 1 <= index <= len(trees):
            raise ValueError(name)
    except ValueError as error:
        raise DomainError(f'Неизвестное имя дерева {name}') from error

    return trees[index - 1]


def render(tree: Tree) -> str:
    """
    Каноническая запись: "e" или "(l v r)"
    """
    if tree.is_root:
        return 'e'

    return f'({render(tree.left)} v {render(tree.right)})'


def render_latex(tree: Tree) -> str:
    """
    Запись для LaTeX: корень \\| и вложенные \\vee
    """
    if tree.is_root:
        return r'\|'

    return rf'({render_latex(tree.left)} \vee {render_latex(tree.right)})'
