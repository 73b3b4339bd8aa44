"""
Базовые классы структурных отображений (копроизведения, кодействия, антиподы)
"""
from copy import copy
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple, Union

from enums import AlgebraTag
from main.cache import MapCache
from models.elements import ALPHA_TAGS, EMPTY, AlgebraElement, Key, TensorElement, Word, concat, letter_word
from models.render import sorted_terms
from models.trees import Tree
from utils import DomainError, TagMismatchError


Image = Dict[Key, Fraction]


def multiply_images(tags: Sequence[AlgebraTag], left: Image, right: Image) -> Image:
    """
    Послойное произведение двух образов в тензорном произведении алгебр tags
    """
    result: Image = {}
    for a_key, a in left.items():
        for b_key, b in right.items():
            key = tuple(concat(tag, x, y) for tag, x, y in zip(tags, a_key, b_key))
            value = result.get(key, 0) + a * b
            if value:
                result[key] = value
            else:
                result.pop(key, None)

    return result


def unit_image(tags: Sequence[AlgebraTag]) -> Image:
    return {(EMPTY,) * len(tags): Fraction(1)}


def lift_image(tags: Sequence[AlgebraTag], image: Image) -> TensorElement:
    return TensorElement._raw(tuple(tags), dict(image))


class StructureMap:
    """
    Линейное отображение A_1 (x) ... (x) A_k -> B_1 (x) ... (x) B_m, заданное на базисных мономах.

    Образы базисных мономов кэшируются в LRU кэше экземпляра; возвращаемые словари не изменяются.
    """
    name: str = ''
    source: Tuple[AlgebraTag, ...] = ()
    target: Tuple[AlgebraTag, ...] = ()

    def __init__(self, name: Optional[str] = None, cache_size: Optional[int] = None):
        if name:
            self.name = name
        self._cache = MapCache(cache_size)
        self._overrides: Dict = {}
        self.corruption = None

    def __repr__(self):
        sources = ' (x) '.join(tag.value for tag in self.source)
        targets = ' (x) '.join(tag.value for tag in self.target)
        return f'{self.name}: {sources} -> {targets}'

    def compute(self, key: Key) -> Image:
        """
        Образ базисного монома
        """
        raise NotImplementedError

    def _cached(self, key: Key) -> Image:
        return self._cache.lookup('word', key, self.compute)

    def image(self, key: Key) -> Image:
        override = self._overrides.get(key)
        if override is not None:
            return override
        return self._cached(key)

    def __call__(self, x: Union[AlgebraElement, TensorElement]):
        result = TensorElement.lift(x).apply(self)
        return result.squeeze() if len(self.target) == 1 else result

    # ------------------------------------------------------------------------------------------------------------------
    #                                           Порча отображений
    # ------------------------------------------------------------------------------------------------------------------

    def top_unit(self, tree: Tree):
        """
        Единица верхнего уровня (базисный моном), соответствующая дереву; для нескольких слотов
        дерево кладётся в последний слот, остальные пусты
        """
        if tree.is_root:
            raise DomainError('Корневое дерево не является базисным мономом')
        return (EMPTY,) * (len(self.source) - 1) + (letter_word(self.source[-1], tree),)

    def genuine_image(self, unit) -> Image:
        return self._cached(unit)

    def corrupted(self, tree: Tree) -> 'StructureMap':
        """
        Копия отображения, образ которого на дереве tree потерял одно слагаемое

        :param tree: дерево, на котором портится отображение
        """
        unit = self.top_unit(tree)
        image = self.genuine_image(unit)
        victim = choose_victim(self.target, image)
        if victim is None:
            raise DomainError(f'Образ {self.name} на {tree!r} нулевой, портить нечего')

        clone = copy(self)
        clone._cache = MapCache()
        clone._overrides = dict(self._overrides)
        clone._overrides[unit] = {key: coeff for key, coeff in image.items() if key != victim}
        clone.corruption = (tree, victim)
        return clone


def choose_victim(tags: Sequence[AlgebraTag], image: Image) -> Optional[Key]:
    """
    Слагаемое, выбрасываемое при порче: первое в порядке вывода, у которого хотя бы два непустых слота
    (для образов с одним слотом - хотя бы две буквы), иначе первое
    """
    ordered = [key for key, _ in sorted_terms(lift_image(tags, image))]
    if not ordered:
        return None
    for key in ordered:
        if len(tags) > 1 and sum(1 for word in key if word) >= 2:
            return key
        if len(tags) == 1 and len(key[0]) >= 2:
            return key

    return ordered[0]


class MultiplicativeMap(StructureMap):
    """
    Морфизм (или антиморфизм при reverse) алгебр с одним слотом источника: образ слова - произведение
    образов букв
    """
    reverse = False

    def letter_image(self, letter: Tree) -> Image:
        """
        Образ одной буквы (дерева или аргумента образующей)
        """
        raise NotImplementedError

    def letter(self, letter: Tree) -> Image:
        override = self._overrides.get(letter)
        if override is not None:
            return override
        return self._cached_letter(letter)

    def _cached_letter(self, letter: Tree) -> Image:
        return self._cache.lookup('letter', letter, self.letter_image)

    def compute(self, key: Key) -> Image:
        (word,) = key
        result = unit_image(self.target)
        for letter in (reversed(word) if self.reverse else word):
            result = multiply_images(self.target, result, self.letter(letter))
            if not result:
                break

        return result

    def image(self, key: Key) -> Image:
        return self._cached(key)

    def top_unit(self, tree: Tree):
        (tag,) = self.source
        if tag in ALPHA_TAGS:
            if tree.is_root or not tree.left.is_root:
                raise DomainError(f'Дерево {tree!r} не является образующей V(u)')
            return tree.right
        if tree.is_root:
            raise DomainError('Корневое дерево не является буквой')
        return tree

    def genuine_image(self, unit) -> Image:
        return self._cached_letter(unit)


class Antipode(MultiplicativeMap):
    """
    Антипод связной градуированной алгебры Хопфа по рекурсии S(x) = -x - sum S(x') x'' по приведённому
    копроизведению; на словах антиморфизм (reverse) для некоммутативных алгебр
    """

    def __init__(self, coproduct: MultiplicativeMap, name: Optional[str] = None, cache_size: Optional[int] = None):
        MultiplicativeMap.__init__(self, name, cache_size)
        if coproduct.target != coproduct.source * 2:
            raise TagMismatchError(f'{coproduct.name} не является копроизведением')
        self.coproduct = coproduct
        self.source = coproduct.source
        self.target = coproduct.source
        self.reverse = coproduct.source[0] is not AlgebraTag.H_ALPHA

    def letter_image(self, letter: Tree) -> Image:
        (tag,) = self.source
        word: Word = (letter,)
        result: Image = {(word,): Fraction(-1)}
        for (left, right), coeff in self.coproduct.genuine_image(letter).items():
            if not left or not right:
                continue
            for (s_word,), s_coeff in self.image((left,)).items():
                key = (concat(tag, s_word, right),)
                value = result.get(key, 0) - coeff * s_coeff
                if value:
                    result[key] = value
                else:
                    result.pop(key, None)

        return result


class ReducedCoproduct(StructureMap):
    """
    Приведённое копроизведение x -> Delta(x) - x (x) 1 - 1 (x) x на непустых словах
    """

    def __init__(self, coproduct: StructureMap, name: Optional[str] = None, cache_size: Optional[int] = None):
        StructureMap.__init__(self, name, cache_size)
        self.coproduct = coproduct
        self.source = coproduct.source
        self.target = coproduct.target

    def compute(self, key: Key) -> Image:
        (word,) = key
        if not word:
            raise DomainError('Приведённое копроизведение не определено на единице')
        return {k: c for k, c in self.coproduct.image(key).items() if k[0] and k[1]}
