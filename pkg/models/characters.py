"""
Характеры алгебр деревьев и древесные разложения пропагаторов
"""
from itertools import combinations
from typing import Callable, Dict, Iterable, Optional

from enums import AlgebraTag, ExpansionKind
from models.elements import ALPHA_TAGS, AlgebraElement, Word, letter_word
from models.ring import Ring, RingValue, ScalarRing
from models.series import TruncatedSeries
from models.trees import E, Tree, render, trees_up_to, v_wrap
from utils import CharacterError, DomainError


class Character:
    """
    Морфизм алгебры деревьев в кольцо: значения на буквах, на словах - произведение слева направо.

    Для H^gamma и H^e буквы - деревья, для H^alpha - образующие V(u) (хранятся по аргументу u).
    Значения на H^alpha обязаны быть кратными единице кольца, на H~^alpha - попарно коммутировать.
    """
    __slots__ = ('tag', 'ring', 'label', 'default', '_values')

    def __init__(self, tag: AlgebraTag, values: Dict[Tree, RingValue], ring: Ring = None,
                 label: Optional[str] = None, default: Optional[RingValue] = None):
        """
        :param tag: алгебра-источник
        :param values: значения на деревьях (для H^alpha - на образующих V(u))
        :param ring: кольцо значений
        :param label: непрозрачная метка (импульс q), конвейером не интерпретируется
        :param default: значение на буквах, отсутствующих в values; None - такие буквы запрещены
        """
        self.tag = AlgebraTag(tag)
        self.ring = ring or ScalarRing()
        self.label = label
        self.default = None if default is None else self.ring.coerce(default)
        self._values: Dict[Tree, RingValue] = {}
        for tree, value in values.items():
            value = self.ring.coerce(value)
            if tree.is_root:
                if value != self.ring.one():
                    raise CharacterError('Значение характера на корне e обязано быть единицей кольца')
                continue
            (letter,) = self._letters(tree)
            self._values[letter] = value

        if self.tag is AlgebraTag.H_ALPHA:
            self._check_scalar()
        if self.tag in ALPHA_TAGS:
            self._check_commuting()

    def _letters(self, tree: Tree) -> Word:
        if self.tag in ALPHA_TAGS and (tree.is_root or not tree.left.is_root):
            raise CharacterError(f'Характер на H^alpha задаётся на образующих V(u), {render(tree)} не образующая')
        return letter_word(self.tag, tree)

    def _check_scalar(self):
        for u, value in self._values.items():
            if not self.ring.is_scalar(value):
                raise CharacterError(f'Значение на V({render(u)}) не кратно единице кольца, '
                                     'а на коммутативной H^alpha допускаются только скалярные значения')
        if self.default is not None and not self.ring.is_scalar(self.default):
            raise CharacterError('Значение по умолчанию на H^alpha обязано быть кратным единице кольца')

    def _check_commuting(self):
        for (u, a), (v, b) in combinations(self._values.items(), 2):
            if not self.ring.commute(a, b):
                raise CharacterError(f'Значения на V({render(u)}) и V({render(v)}) не коммутируют, '
                                     f'а алгебра H^alpha коммутативна')

    @classmethod
    def zero(cls, tag: AlgebraTag, ring: Ring = None, label: Optional[str] = None) -> 'Character':
        """
        Характер, равный нулю на всех буквах (нулевые контрчлены)
        """
        ring = ring or ScalarRing()
        return cls(tag, {}, ring, label, default=ring.zero())

    def letter(self, letter: Tree) -> RingValue:
        value = self._values.get(letter)
        if value is not None:
            return value
        if self.default is not None:
            return self.default
        shown = render(v_wrap(letter)) if self.tag in ALPHA_TAGS else render(letter)
        raise CharacterError(f'Значение характера на {shown} не задано')

    def word(self, word: Word) -> RingValue:
        value = self.ring.one()
        for letter in word:
            value = value * self.letter(letter)
        return value

    def __call__(self, x: AlgebraElement) -> RingValue:
        return evaluate(self, x)

    def items(self) -> Iterable:
        """
        Пары (дерево, значение); для H^alpha дерево - образующая V(u)
        """
        for letter, value in sorted(self._values.items()):
            yield (v_wrap(letter) if self.tag in ALPHA_TAGS else letter), value

    def dump(self) -> Dict[str, object]:
        return {render(tree): self.ring.dump(value) for tree, value in self.items()}

    def __repr__(self):
        return f'Character({self.tag.value}, {len(self._values)} values, {self.ring!r})'


def evaluate(character: Character, x: AlgebraElement) -> RingValue:
    """
    Значение характера на элементе алгебры

    :param character: характер
    :param x: элемент алгебры character.tag
    """
    if x.tag is not character.tag:
        raise CharacterError(f'Характер на {character.tag.value} применён к элементу {x.tag.value}')
    ring = character.ring
    value = ring.zero()
    for word, coeff in x.terms.items():
        value = value + ring.coerce(coeff) * character.word(word)

    return value


class PropagatorExpansion:
    """
    Древесное разложение sum_t c(t) alpha^|t| до порядка N; коэффициент корня - единица кольца
    """
    __slots__ = ('order', 'ring', 'kind', 'coeffs')

    def __init__(self, order: int, coeffs: Dict[Tree, RingValue], ring: Ring = None,
                 kind: ExpansionKind = ExpansionKind.PRODUCT):
        self.order = order
        self.ring = ring or ScalarRing()
        self.kind = ExpansionKind(kind)
        self.coeffs: Dict[Tree, RingValue] = {}
        for tree in trees_up_to(order):
            self.coeffs[tree] = self.ring.coerce(coeffs.get(tree, self.ring.zero()))
        if self.coeffs[E] != self.ring.one():
            raise DomainError('Коэффициент разложения при корне e должен быть единицей кольца')

    @classmethod
    def from_function(cls, order: int, function: Callable[[Tree], RingValue], ring: Ring = None,
                      kind: ExpansionKind = ExpansionKind.PRODUCT) -> 'PropagatorExpansion':
        ring = ring or ScalarRing()
        return cls(order, {tree: (ring.one() if tree.is_root else function(tree)) for tree in trees_up_to(order)},
                   ring, kind)

    @classmethod
    def from_character(cls, character: Character, order: int,
                       kind: ExpansionKind = ExpansionKind.PRODUCT) -> 'PropagatorExpansion':
        """
        Разложение с коэффициентами U(t)
        """
        return cls.from_function(order, lambda tree: character.word((tree,)), character.ring, kind)

    def __getitem__(self, tree: Tree) -> RingValue:
        return self.coeffs[tree]

    def assemble(self) -> TruncatedSeries:
        """
        Ряд по alpha: коэффициент при alpha^n - сумма коэффициентов деревьев порядка n
        """
        values = [self.ring.zero() for _ in range(self.order + 1)]
        for tree, value in self.coeffs.items():
            values[tree.order] = values[tree.order] + value

        return TruncatedSeries(values, self.order, self.ring)

    def tree_product(self, other: 'PropagatorExpansion', product: Callable[[Tree, Tree], Tree]) -> 'PropagatorExpansion':
        """
        Древесные коэффициенты произведения двух разложений: деревья перемножаются произведением
        product (/ для фотона, \\ для электрона), коэффициенты - слева направо

        :param other: правый множитель
        :param product: ассоциативное произведение деревьев, складывающее порядки
        """
        order = min(self.order, other.order)
        values: Dict[Tree, RingValue] = {}
        for left, a in self.coeffs.items():
            if left.order > order:
                continue
            for right, b in other.coeffs.items():
                if left.order + right.order > order:
                    continue
                tree = product(left, right)
                values[tree] = values.get(tree, self.ring.zero()) + a * b

        return PropagatorExpansion(order, values, self.ring, ExpansionKind.PRODUCT)
