"""
Линейные комбинации базисных слов и тензоров над деревьями
"""
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from enums import AlgebraTag
from models.trees import Tree, decompose_over, enumerate_trees
from utils import DomainError, TagMismatchError, TreeSyntaxError


Word = Tuple[Tree, ...]
Key = Tuple[Word, ...]
Number = Union[int, Fraction]

ALPHA_TAGS = frozenset((AlgebraTag.H_ALPHA, AlgebraTag.H_ALPHA_NC))
FREE_TAGS = frozenset((AlgebraTag.H_GAMMA, AlgebraTag.H_E))
EMPTY: Word = ()


def normalize_word(tag: AlgebraTag, letters: Iterable[Tree]) -> Word:
    """
    Нормальная форма слова в алгебре tag.

    Для H^gamma и H^e буквы - деревья, корень e выбрасывается (это единица);
    для H^alpha и её некоммутативного подъёма буквы - аргументы u образующих V(u),
    в H^alpha они сортируются.

    :param tag: алгебра
    :param letters: буквы
    """
    if tag in FREE_TAGS:
        return tuple(t for t in letters if not t.is_root)
    if tag is AlgebraTag.H_ALPHA:
        return tuple(sorted(letters))

    return tuple(letters)


def concat(tag: AlgebraTag, left: Word, right: Word) -> Word:
    """
    Произведение базисных слов
    """
    if not left:
        return right
    if not right:
        return left
    if tag is AlgebraTag.H_ALPHA:
        return tuple(sorted(left + right))

    return left + right


def word_degree(tag: AlgebraTag, word: Word) -> int:
    """
    Полный порядок слова: сумма порядков деревьев, для образующих V(u) сумма |u| + 1
    """
    if tag in ALPHA_TAGS:
        return sum(u.order + 1 for u in word)

    return sum(t.order for t in word)


def letter_word(tag: AlgebraTag, tree: Tree) -> Word:
    """
    Слово, соответствующее одному дереву (вложение embed_tree на уровне базиса)
    """
    if tag in ALPHA_TAGS:
        return normalize_word(tag, decompose_over(tree))

    return normalize_word(tag, (tree,))


def _check_tag(left: AlgebraTag, right: AlgebraTag):
    if left is not right:
        raise TagMismatchError(f'Алгебры не совпадают: {left.value} и {right.value}')


def _add_into(target: Dict, terms: Dict, factor: Fraction = Fraction(1)):
    for key, coeff in terms.items():
        value = target.get(key, 0) + factor * coeff
        if value:
            target[key] = value
        else:
            target.pop(key, None)


class AlgebraElement:
    """
    Элемент одной из алгебр H^gamma, H^e, H^alpha, H~^alpha: словарь слово -> ненулевой коэффициент
    """
    __slots__ = ('tag', 'terms')

    def __init__(self, tag: AlgebraTag, terms: Optional[Dict[Iterable[Tree], Number]] = None):
        self.tag = AlgebraTag(tag)
        self.terms: Dict[Word, Fraction] = {}
        for letters, coeff in (terms or {}).items():
            _add_into(self.terms, {normalize_word(self.tag, letters): Fraction(coeff)})

    @classmethod
    def _raw(cls, tag: AlgebraTag, terms: Dict[Word, Fraction]) -> 'AlgebraElement':
        element = cls.__new__(cls)
        element.tag = tag
        element.terms = terms
        return element

    @classmethod
    def unit(cls, tag: AlgebraTag) -> 'AlgebraElement':
        return cls._raw(AlgebraTag(tag), {EMPTY: Fraction(1)})

    @classmethod
    def zero(cls, tag: AlgebraTag) -> 'AlgebraElement':
        return cls._raw(AlgebraTag(tag), {})

    @classmethod
    def basis(cls, tag: AlgebraTag, word: Word, coeff: Number = 1) -> 'AlgebraElement':
        return cls(tag, {word: coeff})

    @classmethod
    def from_tree(cls, tag: AlgebraTag, tree: Tree) -> 'AlgebraElement':
        tag = AlgebraTag(tag)
        return cls._raw(tag, {letter_word(tag, tree): Fraction(1)})

    def __iter__(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.tag is other.tag and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.tag, frozenset(self.terms.items())))

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        _check_tag(self.tag, other.tag)
        terms = dict(self.terms)
        _add_into(terms, other.terms)
        return self._raw(self.tag, terms)

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        _check_tag(self.tag, other.tag)
        terms = dict(self.terms)
        _add_into(terms, other.terms, Fraction(-1))
        return self._raw(self.tag, terms)

    def __neg__(self) -> 'AlgebraElement':
        return self._raw(self.tag, {word: -coeff for word, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def coefficient(self, word: Word) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def degree(self) -> Optional[int]:
        """
        Степень однородного элемента, None для неоднородного или нулевого
        """
        degrees = {word_degree(self.tag, word) for word in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def counit(self) -> Fraction:
        return self.terms.get(EMPTY, Fraction(0))

    def __repr__(self):
        from models.render import render_element
        return render_element(self)


class TensorElement:
    """
    Элемент тензорного произведения алгебр: словарь кортеж слов -> коэффициент, алгебры слотов фиксированы
    """
    __slots__ = ('tags', 'terms')

    def __init__(self, tags: Sequence[AlgebraTag], terms: Optional[Dict[Sequence[Iterable[Tree]], Number]] = None):
        self.tags: Tuple[AlgebraTag, ...] = tuple(AlgebraTag(tag) for tag in tags)
        self.terms: Dict[Key, Fraction] = {}
        for key, coeff in (terms or {}).items():
            if len(key) != len(self.tags):
                raise TagMismatchError(f'Ожидалось слотов: {len(self.tags)}, получено: {len(key)}')
            key = tuple(normalize_word(tag, word) for tag, word in zip(self.tags, key))
            _add_into(self.terms, {key: Fraction(coeff)})

    @classmethod
    def _raw(cls, tags: Tuple[AlgebraTag, ...], terms: Dict[Key, Fraction]) -> 'TensorElement':
        element = cls.__new__(cls)
        element.tags = tags
        element.terms = terms
        return element

    @classmethod
    def zero(cls, tags: Sequence[AlgebraTag]) -> 'TensorElement':
        return cls._raw(tuple(AlgebraTag(tag) for tag in tags), {})

    @classmethod
    def unit(cls, tags: Sequence[AlgebraTag]) -> 'TensorElement':
        tags = tuple(AlgebraTag(tag) for tag in tags)
        return cls._raw(tags, {(EMPTY,) * len(tags): Fraction(1)})

    @classmethod
    def lift(cls, element: Union[AlgebraElement, 'TensorElement']) -> 'TensorElement':
        """
        Элемент алгебры как тензор с одним слотом
        """
        if isinstance(element, TensorElement):
            return element
        return cls._raw((element.tag,), {(word,): coeff for word, coeff in element.terms.items()})

    @property
    def slot_count(self) -> int:
        return len(self.tags)

    def squeeze(self) -> Union[AlgebraElement, 'TensorElement']:
        """
        Тензор с одним слотом как элемент алгебры
        """
        if len(self.tags) != 1:
            return self
        return AlgebraElement._raw(self.tags[0], {key[0]: coeff for key, coeff in self.terms.items()})

    def __iter__(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            other = TensorElement.lift(other)
        if isinstance(other, TensorElement):
            return self.tags == other.tags and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.tags, frozenset(self.terms.items())))

    def _check(self, other: 'TensorElement'):
        if self.tags != other.tags:
            raise TagMismatchError(f'Раскладки слотов не совпадают: {[t.value for t in self.tags]} и '
                                   f'{[t.value for t in other.tags]}')

    def __add__(self, other: 'TensorElement') -> 'TensorElement':
        other = TensorElement.lift(other)
        self._check(other)
        terms = dict(self.terms)
        _add_into(terms, other.terms)
        return self._raw(self.tags, terms)

    def __sub__(self, other: 'TensorElement') -> 'TensorElement':
        other = TensorElement.lift(other)
        self._check(other)
        terms = dict(self.terms)
        _add_into(terms, other.terms, Fraction(-1))
        return self._raw(self.tags, terms)

    def __neg__(self) -> 'TensorElement':
        return self._raw(self.tags, {key: -coeff for key, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.zero(self.tags)
            return self._raw(self.tags, {key: other * coeff for key, coeff in self.terms.items()})
        if isinstance(other, TensorElement):
            self._check(other)
            terms: Dict[Key, Fraction] = defaultdict(Fraction)
            for left, a in self.terms.items():
                for right, b in other.terms.items():
                    key = tuple(concat(tag, x, y) for tag, x, y in zip(self.tags, left, right))
                    terms[key] += a * b
            return self._raw(self.tags, {key: coeff for key, coeff in terms.items() if coeff})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def coefficient(self, key: Key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def contract(self, slot: int) -> 'TensorElement':
        """
        Применение коединицы к слоту (с единицы)

        :param slot: номер слота
        """
        index = slot - 1
        tags = self.tags[:index] + self.tags[index + 1:]
        terms: Dict[Key, Fraction] = {}
        for key, coeff in self.terms.items():
            if not key[index]:
                _add_into(terms, {key[:index] + key[index + 1:]: coeff})
        return self._raw(tags, terms)

    def permute(self, order: Sequence[int]) -> 'TensorElement':
        """
        Перестановка слотов: новый слот i - это старый слот order[i] (с единицы)
        """
        if sorted(order) != list(range(1, len(self.tags) + 1)):
            raise DomainError(f'Некорректная перестановка слотов {tuple(order)}')
        tags = tuple(self.tags[i - 1] for i in order)
        return self._raw(tags, {tuple(key[i - 1] for i in order): coeff for key, coeff in self.terms.items()})

    def swap(self) -> 'TensorElement':
        """
        Перестановка tau двух слотов
        """
        return self.permute((2, 1))

    def apply(self, *maps) -> 'TensorElement':
        """
        Применение тензорного произведения отображений f_1 (x) f_2 (x) ...

        Каждое отображение поглощает столько слотов подряд, сколько у него алгебр-источников;
        None - тождественное отображение одного слота.

        :param maps: отображения StructureMap или None
        """
        consumed = sum(1 if m is None else len(m.source) for m in maps)
        if consumed != len(self.tags):
            raise TagMismatchError(f'Отображения поглощают {consumed} слотов, у тензора их {len(self.tags)}')

        tags: Tuple[AlgebraTag, ...] = ()
        position = 0
        for m in maps:
            if m is None:
                tags += (self.tags[position],)
                position += 1
            else:
                width = len(m.source)
                if tuple(m.source) != self.tags[position:position + width]:
                    raise TagMismatchError(f'Отображение {m.name} не применимо к слотам {position + 1}..'
                                           f'{position + width}')
                tags += tuple(m.target)
                position += width

        terms: Dict[Key, Fraction] = {}
        for key, coeff in self.terms.items():
            partial: Dict[Key, Fraction] = {(): coeff}
            position = 0
            for m in maps:
                if m is None:
                    image = {(key[position],): Fraction(1)}
                    position += 1
                else:
                    width = len(m.source)
                    image = m.image(key[position:position + width])
                    position += width
                partial = {head + tail: a * b for head, a in partial.items() for tail, b in image.items()}
                if not partial:
                    break
            _add_into(terms, partial)

        return self._raw(tags, terms)

    def __repr__(self):
        from models.render import render_element
        return render_element(self)


Element = Union[AlgebraElement, TensorElement]


def unit(tag: AlgebraTag) -> AlgebraElement:
    return AlgebraElement.unit(tag)


def add(x: Element, y: Element) -> Element:
    return x + y


def negate(x: Element) -> Element:
    return -x


def scale(coeff: Number, x: Element) -> Element:
    """
    Умножение на скаляр
    """
    coeff = Fraction(coeff)
    if isinstance(x, TensorElement):
        return x * coeff
    if not coeff:
        return AlgebraElement.zero(x.tag)
    return AlgebraElement._raw(x.tag, {word: coeff * c for word, c in x.terms.items()})


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """
    Произведение в алгебре: конкатенация слов (для H^alpha - коммутативная)

    :param x: первый множитель
    :param y: второй множитель
    """
    _check_tag(x.tag, y.tag)
    terms: Dict[Word, Fraction] = defaultdict(Fraction)
    for left, a in x.terms.items():
        for right, b in y.terms.items():
            terms[concat(x.tag, left, right)] += a * b

    return AlgebraElement._raw(x.tag, {word: coeff for word, coeff in terms.items() if coeff})


def embed_tree(tag: AlgebraTag, tree: Tree) -> AlgebraElement:
    """
    Базисный элемент дерева: однобуквенное слово в H^gamma, H^e, моном образующих decompose_over(t) в H^alpha

    :param tag: алгебра
    :param tree: дерево
    """
    return AlgebraElement.from_tree(tag, tree)


def counit(x: AlgebraElement) -> Fraction:
    """
    Коэффициент пустого слова
    """
    return x.counit()


def grade_components(x: AlgebraElement) -> Dict[int, AlgebraElement]:
    """
    Разложение элемента на однородные компоненты
    """
    components: Dict[int, Dict[Word, Fraction]] = defaultdict(dict)
    for word, coeff in x.terms.items():
        components[word_degree(x.tag, word)][word] = coeff

    return {degree: AlgebraElement._raw(x.tag, terms) for degree, terms in sorted(components.items())}


def tensor_degree(x: TensorElement, key: Key) -> int:
    return sum(word_degree(tag, word) for tag, word in zip(x.tags, key))


def tensor(elements: Sequence[Element]) -> TensorElement:
    """
    Тензорное произведение элементов (слоты сцепляются)
    """
    tags: Tuple[AlgebraTag, ...] = ()
    terms: Dict[Key, Fraction] = {(): Fraction(1)}
    for element in elements:
        element = TensorElement.lift(element)
        tags += element.tags
        terms = {head + tail: a * b for head, a in terms.items() for tail, b in element.terms.items()}

    return TensorElement._raw(tags, terms)


def slot_multiply(x: TensorElement, i: int, j: int, target: int) -> TensorElement:
    """
    Умножение слота i на слот j (в этом порядке) с помещением результата в позицию target.
    Остальные слоты сохраняют взаимный порядок, число слотов уменьшается на единицу.

    :param x: тензор
    :param i: номер левого множителя (с единицы)
    :param j: номер правого множителя (с единицы)
    :param target: позиция произведения в результате (с единицы)
    """
    count = len(x.tags)
    if i == j or not (1 <= i <= count and 1 <= j <= count and 1 <= target <= count - 1):
        raise DomainError(f'Некорректные слоты {i}, {j} -> {target} для тензора из {count} слотов')
    tag = x.tags[i - 1]
    _check_tag(tag, x.tags[j - 1])

    rest = [k for k in range(count) if k not in (i - 1, j - 1)]
    tags = [x.tags[k] for k in rest]
    tags.insert(target - 1, tag)
    terms: Dict[Key, Fraction] = {}
    for key, coeff in x.terms.items():
        words = [key[k] for k in rest]
        words.insert(target - 1, concat(tag, key[i - 1], key[j - 1]))
        _add_into(terms, {tuple(words): coeff})

    return TensorElement._raw(tuple(tags), terms)


def abelianize(x: Element) -> Element:
    """
    Проекция H~^alpha -> H^alpha (поэлементно по слотам тензора)
    """
    if isinstance(x, AlgebraElement):
        if x.tag is not AlgebraTag.H_ALPHA_NC:
            return x
        return AlgebraElement(AlgebraTag.H_ALPHA, x.terms)

    tags = tuple(AlgebraTag.H_ALPHA if tag is AlgebraTag.H_ALPHA_NC else tag for tag in x.tags)
    return TensorElement(tags, x.terms)


@lru_cache(maxsize=None)
def words_of_degree(tag: AlgebraTag, degree: int) -> Tuple[Word, ...]:
    """
    Все базисные слова алгебры tag полного порядка degree
    """
    if degree == 0:
        return (EMPTY,)
    if tag is AlgebraTag.H_ALPHA:
        return tuple(word for word in words_of_degree(AlgebraTag.H_ALPHA_NC, degree) if list(word) == sorted(word))

    alpha = tag in ALPHA_TAGS
    words = []
    for first in range(1, degree + 1):
        letters = enumerate_trees(first - 1 if alpha else first)
        for letter, rest in cartesian(letters, words_of_degree(tag, degree - first)):
            words.append((letter,) + rest)

    return tuple(words)


def basis_words(tag: AlgebraTag, max_order: int, min_order: int = 0) -> List[Word]:
    """
    Базисные слова полного порядка от min_order до max_order

    :param tag: алгебра
    :param max_order: наибольший полный порядок
    :param min_order: наименьший полный порядок
    """
    tag = AlgebraTag(tag)
    return [word for degree in range(min_order, max_order + 1) for word in words_of_degree(tag, degree)]


def basis_keys(tags: Sequence[AlgebraTag], max_order: int, min_order: int = 0) -> List[Key]:
    """
    Базисные тензорные мономы полного порядка от min_order до max_order
    """
    tags = tuple(AlgebraTag(tag) for tag in tags)
    if len(tags) == 1:
        return [(word,) for word in basis_words(tags[0], max_order, min_order)]

    keys = []
    for degree in range(min_order, max_order + 1):
        for head_degree in range(degree + 1):
            for head in words_of_degree(tags[0], head_degree):
                for tail in basis_keys(tags[1:], degree - head_degree, degree - head_degree):
                    keys.append((head,) + tail)

    return keys


def element_from_terms(tags: Sequence[AlgebraTag], parsed_terms) -> TensorElement:
    """
    Сборка тензора из разобранных слагаемых (см. models.parsing.parse_terms).
    Буквы слота - деревья, вкладываемые в алгебру слота и перемножаемые.
    """
    tags = tuple(AlgebraTag(tag) for tag in tags)
    terms: Dict[Key, Fraction] = {}
    for term in parsed_terms:
        if term.slots is None:
            key = (EMPTY,) * len(tags)
        else:
            if len(term.slots) != len(tags):
                raise TreeSyntaxError(f'Слагаемое содержит {len(term.slots)} слотов, ожидалось {len(tags)}')
            key = []
            for tag, letters in zip(tags, term.slots):
                word = EMPTY
                for letter in letters:
                    word = concat(tag, word, letter_word(tag, letter))
                key.append(word)
            key = tuple(key)
        _add_into(terms, {key: term.coeff})

    return TensorElement._raw(tags, terms)


def parse_element(text: str, tag: AlgebraTag) -> AlgebraElement:
    """
    Разбор элемента алгебры из текста, например "-(e v (e v e)) + (e v e) (e v e)"
    """
    from models.parsing import parse_terms
    return element_from_terms((tag,), parse_terms(text)).squeeze()


def parse_tensor(text: str, tags: Sequence[AlgebraTag]) -> TensorElement:
    """
    Разбор тензора из текста, слоты разделены "(x)"
    """
    from models.parsing import parse_terms
    return element_from_terms(tags, parse_terms(text))
