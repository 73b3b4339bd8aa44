"""
Каталог проверяемых законов по наборам
"""
from fractions import Fraction
from random import Random
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from configs import section
from enums import AlgebraTag, RingKind, SuiteName
from models.elements import (EMPTY, Key, TensorElement, basis_keys, concat, letter_word, slot_multiply,
                             tensor_degree, words_of_degree)
from models.parsing import parse
from models.render import render_element
from models.ring import make_ring
from models.series import TruncatedSeries
from models.trees import (E, decompose_over, decompose_under, enumerate_trees, graft, lookup, over, render,
                          trees_up_to, un_graft, under, under_word_tree, word_tree)
from services.coactions.photon import compare_with_charge
from services.coactions.semidirect import electron_recursive_image
from services.coactions.tree_coactions import coaction_recursive, single_tree_coaction
from services.enums import MapName
from services.hopf.base import StructureMap
from services.hopf.pruning import compare_recursive
from services.registry import MapRegistry
from services.renormalization.pipeline import (duality_mismatches, dyson_check_electron, dyson_check_photon,
                                               renormalization_triviality)
from services.renormalization.toy import make_toy_character, toy_characters
from services.series import group
from services.series.sampling import random_gc, random_gp
from utils import catalan


HE_BASIS_COUNTS = (1, 1, 3, 10, 35, 126)

Outcome = Optional[str]


class Law:
    """
    Проверяемый закон: ленивый список случаев и проверка одного случая,
    возвращающая None или текст контрпримера.

    expected_failure - закон заведомо нарушается (свидетель предположения); прогон обязан найти нарушение
    """

    def __init__(self, name: str, suite: SuiteName, cases: Callable[[], Iterable], check: Callable[[object], Outcome],
                 expected_failure: bool = False):
        self.name = name
        self.suite = suite
        self.expected_failure = expected_failure
        self._factory = cases
        self._cases: Optional[List] = None
        self.check = check

    @property
    def cases(self) -> List:
        if self._cases is None:
            self._cases = list(self._factory())
        return self._cases

    def __repr__(self):
        return f'Law({self.suite.value}/{self.name})'


class CheckContext:
    """
    Параметры проверок: реестр отображений и размеры перебора (по умолчанию из конфигурации)
    """

    def __init__(self, registry: MapRegistry, order: Optional[int] = None):
        checks, series, renorm = section('checks'), section('series'), section('renorm')
        self.registry = registry
        self.order = order if order is not None else checks.get('order', 4)
        self.alpha_tree_order = max(self.order, checks.get('alpha_tree_order', 6))
        self.recursion_order = max(self.order, checks.get('recursion_order', 8))
        self.count_order = checks.get('count_order', 12)
        self.series_order = series.get('truncation', 4)
        self.series_seed = series.get('seed', 0)
        self.series_samples = series.get('samples', 50)
        self.matrix_dim = series.get('matrix_dim', 2)
        self.renorm_order = renorm.get('order', 4)
        self.renorm_seed = renorm.get('seed', 0)
        self.renorm_samples = renorm.get('samples', 20)
        self.renorm_dim = renorm.get('d', 4)
        self.renorm_matrix_order = renorm.get('matrix_order', 3)

    def map(self, name: MapName) -> StructureMap:
        return self.registry[name]


def _basis(tags: Sequence[AlgebraTag], key: Key) -> TensorElement:
    return TensorElement._raw(tuple(tags), {tuple(key): Fraction(1)})


def _compare(x, lhs: TensorElement, rhs: TensorElement) -> Outcome:
    if lhs == rhs:
        return None
    return f'{render_element(x)}: разность сторон {render_element(lhs - rhs)}'


def _tree_keys(tag: AlgebraTag, order: int, start: int = 0) -> List[Key]:
    return [(letter_word(tag, tree),) for tree in trees_up_to(order, start)]


def _with_trees(keys: List[Key], extra: List[Key]) -> List[Key]:
    seen = set(keys)
    return keys + [key for key in extra if key not in seen and not seen.add(key)]


def _pairs(tag: AlgebraTag, order: int) -> List[Tuple]:
    pairs = []
    for total in range(order + 1):
        for first in range(total + 1):
            for left in words_of_degree(tag, first):
                for right in words_of_degree(tag, total - first):
                    pairs.append((left, right))
    return pairs


# ----------------------------------------------------------------------------------------------------------------------
#                                           Деревья
# ----------------------------------------------------------------------------------------------------------------------


def _tree_laws(ctx: CheckContext) -> List[Law]:
    order = ctx.alpha_tree_order

    def graft_law(tree) -> Outcome:
        if graft(*un_graft(tree)) != tree:
            return f'graft(un_graft({render(tree)})) != {render(tree)}'
        return None

    def triples():
        for total in range(ctx.order + 1):
            for a in trees_up_to(total):
                for b in trees_up_to(total - a.order):
                    for c in enumerate_trees(total - a.order - b.order):
                        yield a, b, c

    def associativity(case) -> Outcome:
        a, b, c = case
        if over(over(a, b), c) != over(a, over(b, c)):
            return f'({render(a)} / {render(b)}) / {render(c)} != {render(a)} / ({render(b)} / {render(c)})'
        if under(under(a, b), c) != under(a, under(b, c)):
            return f'({render(a)} \\ {render(b)}) \\ {render(c)} != {render(a)} \\ ({render(b)} \\ {render(c)})'
        return None

    def unit_law(tree) -> Outcome:
        if not over(E, tree) == tree == over(tree, E) or not under(E, tree) == tree == under(tree, E):
            return f'e не является единицей для {render(tree)}'
        return None

    def decompose_law(tree) -> Outcome:
        if word_tree(decompose_over(tree)) != tree or under_word_tree(decompose_under(tree)) != tree:
            return f'разложение на образующие не восстанавливает {render(tree)}'
        return None

    def text_law(tree) -> Outcome:
        if parse(render(tree)) != tree or lookup(tree.name) != tree:
            return f'{render(tree)} не восстанавливается из записи или имени {tree.name}'
        return None

    def order_law(n) -> Outcome:
        trees = enumerate_trees(n)
        if any(not a < b for a, b in zip(trees, trees[1:])):
            return f'деревья порядка {n} перечислены не в каноническом порядке'
        return None

    return [
        Law('graft-ungraft', SuiteName.TREES, lambda: trees_up_to(order, 1), graft_law),
        Law('over-under-associative', SuiteName.TREES, triples, associativity),
        Law('over-under-unit', SuiteName.TREES, lambda: trees_up_to(order), unit_law),
        Law('decompose-inverse', SuiteName.TREES, lambda: trees_up_to(order), decompose_law),
        Law('parse-render', SuiteName.TREES, lambda: trees_up_to(order), text_law),
        Law('enumeration-order', SuiteName.TREES, lambda: range(order + 1), order_law),
    ]


# ----------------------------------------------------------------------------------------------------------------------
#                                           Алгебра
# ----------------------------------------------------------------------------------------------------------------------


GRADED_MAPS = (MapName.DELTA_P_GAMMA, MapName.DELTA_P_E, MapName.DELTA_ALPHA, MapName.DELTA_SMALL,
               MapName.DELTA_ALPHA_NC, MapName.DELTA_SMALL_NC, MapName.COACTION_GAMMA, MapName.COACTION_E,
               MapName.DELTA_E, MapName.DELTA_GAMMA, MapName.DELTA_QED)
MORPHISMS = (MapName.DELTA_P_GAMMA, MapName.DELTA_P_E, MapName.DELTA_ALPHA, MapName.DELTA_ALPHA_NC,
             MapName.COACTION_GAMMA, MapName.COACTION_E, MapName.DELTA_E, MapName.DELTA_GAMMA, MapName.SIGMA)


def _algebra_laws(ctx: CheckContext) -> List[Law]:
    laws = []

    def grading(structure_map: StructureMap):
        def check(key) -> Outcome:
            x = _basis(structure_map.source, key)
            degree = tensor_degree(x, key)
            image = x.apply(structure_map)
            wrong = [k for k in image.terms if tensor_degree(image, k) != degree]
            if wrong:
                return f'{render_element(x)}: слагаемое степени {tensor_degree(image, wrong[0])} вместо {degree}'
            return None
        return check

    def morphism(structure_map: StructureMap):
        (tag,) = structure_map.source

        def check(pair) -> Outcome:
            left, right = pair
            product = _basis((tag,), (concat(tag, left, right),))
            lhs = product.apply(structure_map)
            rhs = _basis((tag,), (left,)).apply(structure_map) * _basis((tag,), (right,)).apply(structure_map)
            return _compare(product, lhs, rhs)
        return check

    for name in GRADED_MAPS:
        structure_map = ctx.map(name)
        laws.append(Law(f'grading[{name.value}]', SuiteName.ALGEBRA,
                        lambda m=structure_map: basis_keys(m.source, ctx.order), grading(structure_map)))
    for name in MORPHISMS:
        structure_map = ctx.map(name)
        laws.append(Law(f'morphism[{name.value}]', SuiteName.ALGEBRA,
                        lambda m=structure_map: _pairs(m.source[0], ctx.order), morphism(structure_map)))

    delta_alpha = ctx.map(MapName.DELTA_ALPHA)

    def primitive_pairing(tree) -> Outcome:
        word = letter_word(AlgebraTag.H_ALPHA, tree)
        image = _basis((AlgebraTag.H_ALPHA,), (word,)).apply(delta_alpha)
        if image.coefficient((word, EMPTY)) != 1 or image.coefficient((EMPTY, word)) != 1:
            return f'Delta^alpha({render(tree)}) не содержит t (x) 1 и 1 (x) t ровно по одному разу'
        return None

    laws.append(Law('primitive-pairing', SuiteName.ALGEBRA, lambda: trees_up_to(ctx.alpha_tree_order, 1),
                    primitive_pairing))

    delta_p_e, antipode_p_e = ctx.map(MapName.DELTA_P_E), ctx.map(MapName.ANTIPODE_P_E)

    def non_cocommutative(_) -> Outcome:
        for tree in trees_up_to(3, 1):
            image = _basis((AlgebraTag.H_E,), (letter_word(AlgebraTag.H_E, tree),)).apply(delta_p_e)
            if image.swap() != image:
                return None
        return 'Delta^p_e кокоммутативно на всех деревьях порядка <= 3'

    def not_involutive(_) -> Outcome:
        for key in basis_keys((AlgebraTag.H_E,), 5, 1):
            x = _basis((AlgebraTag.H_E,), key)
            if x.apply(antipode_p_e).apply(antipode_p_e) != x:
                return None
        return 'S^p_e o S^p_e = Id на всех словах порядка <= 5'

    laws.append(Law('non-cocommutative', SuiteName.ALGEBRA, lambda: [None], non_cocommutative))
    laws.append(Law('antipode-not-involutive', SuiteName.ALGEBRA, lambda: [None], not_involutive))

    characters = {
        AlgebraTag.H_GAMMA: make_toy_character(AlgebraTag.H_GAMMA, ctx.renorm_seed, RingKind.MATRIX, ctx.matrix_dim,
                                               ctx.order),
        AlgebraTag.H_E: make_toy_character(AlgebraTag.H_E, ctx.renorm_seed, RingKind.MATRIX, ctx.matrix_dim,
                                           ctx.order),
        AlgebraTag.H_ALPHA: make_toy_character(AlgebraTag.H_ALPHA, ctx.renorm_seed, RingKind.SCALAR, 1, ctx.order),
    }

    def multiplicative(tag: AlgebraTag):
        character = characters[tag]

        def check(pair) -> Outcome:
            left, right = pair
            if character.word(concat(tag, left, right)) != character.word(left) * character.word(right):
                return f'характер на {tag.value} не мультипликативен на паре {left!r}, {right!r}'
            return None
        return check

    for tag in characters:
        laws.append(Law(f'character-multiplicative[{tag.value}]', SuiteName.ALGEBRA,
                        lambda t=tag: _pairs(t, ctx.order), multiplicative(tag)))

    return laws


# ----------------------------------------------------------------------------------------------------------------------
#                                           Копроизведения и антиподы
# ----------------------------------------------------------------------------------------------------------------------


COPRODUCTS = (MapName.DELTA_P_GAMMA, MapName.DELTA_P_E, MapName.DELTA_ALPHA, MapName.DELTA_ALPHA_NC,
              MapName.DELTA_QED, MapName.DELTA_ALPHA_GAMMA)
ANTIPODES = ((MapName.ANTIPODE_P_GAMMA, MapName.DELTA_P_GAMMA), (MapName.ANTIPODE_P_E, MapName.DELTA_P_E),
             (MapName.ANTIPODE_ALPHA, MapName.DELTA_ALPHA), (MapName.ANTIPODE_ALPHA_NC, MapName.DELTA_ALPHA_NC),
             (MapName.ANTIPODE_QED, MapName.DELTA_QED), (MapName.ANTIPODE_ALPHA_GAMMA, MapName.DELTA_ALPHA_GAMMA))


def _coproduct_cases(ctx: CheckContext, coproduct: StructureMap) -> List[Key]:
    keys = basis_keys(coproduct.source, ctx.order)
    if coproduct.source[0] in (AlgebraTag.H_ALPHA, AlgebraTag.H_ALPHA_NC) and len(coproduct.source) == 1:
        keys = _with_trees(keys, _tree_keys(coproduct.source[0], ctx.alpha_tree_order))
    return keys


def _multiply_halves(x: TensorElement, width: int) -> TensorElement:
    for i in range(width):
        x = slot_multiply(x, i + 1, width + 1, i + 1)
    return x


def _coassoc_laws(ctx: CheckContext) -> List[Law]:
    def coassociativity(coproduct: StructureMap):
        identity = [None] * len(coproduct.source)

        def check(key) -> Outcome:
            x = _basis(coproduct.source, key)
            image = x.apply(coproduct)
            return _compare(x, image.apply(coproduct, *identity), image.apply(*identity, coproduct))
        return check

    laws = []
    for name in COPRODUCTS:
        coproduct = ctx.map(name)
        laws.append(Law(f'coassociativity[{name.value}]', SuiteName.COASSOC,
                        lambda m=coproduct: _coproduct_cases(ctx, m), coassociativity(coproduct)))
    return laws


def _counit_laws(ctx: CheckContext) -> List[Law]:
    def counit(coproduct: StructureMap):
        width = len(coproduct.source)

        def check(key) -> Outcome:
            x = _basis(coproduct.source, key)
            left = right = x.apply(coproduct)
            for _ in range(width):
                left = left.contract(1)
                right = right.contract(right.slot_count)
            return _compare(x, left, x) or _compare(x, right, x)
        return check

    laws = []
    for name in COPRODUCTS:
        coproduct = ctx.map(name)
        laws.append(Law(f'counit[{name.value}]', SuiteName.COUNIT,
                        lambda m=coproduct: _coproduct_cases(ctx, m), counit(coproduct)))
    return laws


def _antipode_laws(ctx: CheckContext) -> List[Law]:
    def axiom(antipode: StructureMap, coproduct: StructureMap):
        width = len(coproduct.source)
        identity = [None] * width

        def check(key) -> Outcome:
            x = _basis(coproduct.source, key)
            image = x.apply(coproduct)
            counit = x.coefficient((EMPTY,) * width)
            expected = TensorElement._raw(coproduct.source, {(EMPTY,) * width: counit} if counit else {})
            left = _multiply_halves(image.apply(antipode, *identity), width)
            right = _multiply_halves(image.apply(*identity, antipode), width)
            return _compare(x, left, expected) or _compare(x, right, expected)
        return check

    laws = []
    for antipode_name, coproduct_name in ANTIPODES:
        antipode, coproduct = ctx.map(antipode_name), ctx.map(coproduct_name)
        laws.append(Law(f'antipode[{antipode_name.value}]', SuiteName.ANTIPODE,
                        lambda m=coproduct: _coproduct_cases(ctx, m), axiom(antipode, coproduct)))
    return laws


# ----------------------------------------------------------------------------------------------------------------------
#                                           Кодействия
# ----------------------------------------------------------------------------------------------------------------------


def _coaction_law(coaction: StructureMap, coproduct: StructureMap):
    """
    (d (x) Id) d = (Id (x) Delta) d для правого кодействия d
    """
    identity = [None] * len(coproduct.source)

    def check(key) -> Outcome:
        x = _basis(coaction.source, key)
        image = x.apply(coaction)
        return _compare(x, image.apply(coaction, *identity), image.apply(None, coproduct))
    return check


def _commutation_law(coaction: StructureMap, pruning: StructureMap):
    """
    (Delta^p (x) Id) d = m_24 (d (x) d) Delta^p
    """
    def check(key) -> Outcome:
        x = _basis(coaction.source, key)
        lhs = x.apply(coaction).apply(pruning, None)
        rhs = slot_multiply(x.apply(pruning).apply(coaction, coaction), 2, 4, 3)
        return _compare(x, lhs, rhs)
    return check


def _coaction_laws(ctx: CheckContext) -> List[Law]:
    m = ctx.map
    alpha, gamma, electron, nc = AlgebraTag.H_ALPHA, AlgebraTag.H_GAMMA, AlgebraTag.H_E, AlgebraTag.H_ALPHA_NC
    words = {tag: (lambda t=tag: basis_keys((t,), ctx.order)) for tag in (gamma, electron)}
    nc_trees = lambda: _with_trees(basis_keys((nc,), ctx.order), _tree_keys(nc, ctx.alpha_tree_order))  # noqa: E731
    alpha_trees = lambda: _with_trees(basis_keys((alpha,), ctx.order), _tree_keys(alpha, ctx.alpha_tree_order))  # noqa: E731
    laws = [
        Law('coaction[delta-small-nc]', SuiteName.COACTION, nc_trees,
            _coaction_law(m(MapName.DELTA_SMALL_NC), m(MapName.DELTA_ALPHA_NC))),
        Law('coaction[delta-small]', SuiteName.COACTION, alpha_trees,
            _coaction_law(m(MapName.DELTA_SMALL), m(MapName.DELTA_ALPHA))),
        Law('coaction[coaction-gamma]', SuiteName.COACTION, words[gamma],
            _coaction_law(m(MapName.COACTION_GAMMA), m(MapName.DELTA_ALPHA))),
        Law('coaction[coaction-e]', SuiteName.COACTION, words[electron],
            _coaction_law(m(MapName.COACTION_E), m(MapName.DELTA_ALPHA))),
        Law('commutation[coaction-gamma]', SuiteName.COACTION, words[gamma],
            _commutation_law(m(MapName.COACTION_GAMMA), m(MapName.DELTA_P_GAMMA))),
        Law('commutation[coaction-e]', SuiteName.COACTION, words[electron],
            _commutation_law(m(MapName.COACTION_E), m(MapName.DELTA_P_E))),
        Law('coaction[delta-e]', SuiteName.COACTION, words[electron],
            _coaction_law(m(MapName.DELTA_E), m(MapName.DELTA_QED))),
        Law('coaction[photon-semidirect-coaction]', SuiteName.COACTION, words[gamma],
            _coaction_law(m(MapName.PHOTON_SEMIDIRECT_COACTION), m(MapName.DELTA_ALPHA_GAMMA))),
        Law('coaction[delta-gamma]', SuiteName.COACTION, words[gamma],
            _coaction_law(m(MapName.DELTA_GAMMA), m(MapName.DELTA_ALPHA))),
    ]

    sigma, delta_alpha, delta_gamma = m(MapName.SIGMA), m(MapName.DELTA_ALPHA), m(MapName.DELTA_GAMMA)

    def intertwining(key) -> Outcome:
        x = _basis((gamma,), key)
        return _compare(x, x.apply(sigma).apply(delta_alpha), x.apply(delta_gamma).apply(sigma, None))

    def corollary(tree) -> Outcome:
        if not compare_with_charge(delta_gamma, tree):
            return f'Delta^gamma({render(tree)}) != Delta~^alpha({render(tree)})'
        return None

    coaction_gamma = m(MapName.COACTION_GAMMA)

    def single_tree(tree) -> Outcome:
        x = _basis((gamma,), (letter_word(gamma, tree),))
        for structure_map in (coaction_gamma, delta_gamma):
            if any(len(key[0]) > 1 for key in x.apply(structure_map).terms):
                return f'{structure_map.name}({render(tree)}) содержит лес в левом слоте'
        return None

    delta_e = m(MapName.DELTA_E)

    def recursions(tree) -> Outcome:
        if single_tree_coaction(tree) != coaction_recursive(tree):
            return f'рекурсивное delta({render(tree)}) расходится с delta~'
        x = _basis((electron,), (letter_word(electron, tree),))
        if electron_recursive_image(tree) != x.apply(delta_e):
            return f'рекурсивное Delta^e({render(tree)}) расходится с (delta^e (x) Id) Delta^p_e'
        return None

    def pruning_recursions(tree) -> Outcome:
        if not compare_recursive(tree):
            return f'рекурсивное копроизведение обрезания расходится с факторизацией на {render(tree)}'
        return None

    laws += [
        Law('intertwining', SuiteName.COACTION, lambda: basis_keys((gamma,), ctx.alpha_tree_order - 1), intertwining),
        Law('photon-equals-charge', SuiteName.COACTION, lambda: trees_up_to(ctx.alpha_tree_order), corollary),
        Law('single-tree-closure', SuiteName.COACTION, lambda: trees_up_to(ctx.alpha_tree_order), single_tree),
        Law('recursive-coactions', SuiteName.COACTION, lambda: trees_up_to(ctx.alpha_tree_order), recursions),
        Law('recursive-pruning', SuiteName.COACTION, lambda: trees_up_to(ctx.recursion_order), pruning_recursions),
    ]
    return laws


# ----------------------------------------------------------------------------------------------------------------------
#                                           Комбинаторика
# ----------------------------------------------------------------------------------------------------------------------


def _count_laws(ctx: CheckContext) -> List[Law]:
    delta_p_gamma = ctx.map(MapName.DELTA_P_GAMMA)

    def catalan_law(n) -> Outcome:
        count = len(enumerate_trees(n))
        return None if count == catalan(n) else f'|Y_{n}| = {count}, ожидалось {catalan(n)}'

    def term_count(tree) -> Outcome:
        x = _basis((AlgebraTag.H_GAMMA,), (letter_word(AlgebraTag.H_GAMMA, tree),))
        terms = len(x.apply(delta_p_gamma))
        expected = len(decompose_over(tree)) + 1
        return None if terms == expected else f'Delta^p_gamma({render(tree)}): {terms} слагаемых, ожидалось {expected}'

    def he_count(n) -> Outcome:
        count = len(words_of_degree(AlgebraTag.H_E, n))
        return None if count == HE_BASIS_COUNTS[n] else f'dim H^e_{n} = {count}, ожидалось {HE_BASIS_COUNTS[n]}'

    return [
        Law('catalan', SuiteName.COUNTS, lambda: range(ctx.count_order + 1), catalan_law),
        Law('pruning-term-count', SuiteName.COUNTS, lambda: trees_up_to(ctx.recursion_order), term_count),
        Law('he-basis-count', SuiteName.COUNTS, lambda: range(len(HE_BASIS_COUNTS)), he_count),
    ]


# ----------------------------------------------------------------------------------------------------------------------
#                                           Группы рядов
# ----------------------------------------------------------------------------------------------------------------------


def series_sample(seed: int, kind: RingKind, dim: int, order: int) -> Dict[str, TruncatedSeries]:
    """
    Случайные f, g, h из G^p (в кольце kind) и скалярные phi, psi, chi из G^c;
    для матричного кольца ещё матричные matrix_phi, matrix_psi, matrix_chi из G^c
    """
    rng = Random(f'series:{RingKind(kind).value}:{seed}')
    ring = make_ring(kind, dim)
    sample = {name: random_gp(rng, order, ring) for name in ('f', 'g', 'h')}
    sample.update({name: random_gc(rng, order) for name in ('phi', 'psi', 'chi')})
    if ring.dim > 1:
        sample.update({f'matrix_{name}': random_gc(rng, order, ring) for name in ('phi', 'psi', 'chi')})
    return sample


def _first(failures: Dict[str, bool]) -> Outcome:
    return next((text for text, ok in failures.items() if not ok), None)


def _series_laws(ctx: CheckContext) -> List[Law]:
    order = ctx.series_order
    seeds = lambda: range(ctx.series_seed, ctx.series_seed + ctx.series_samples)  # noqa: E731
    laws = []

    def sampled(kind: RingKind, body: Callable[[Dict], Dict[str, bool]]):
        def check(seed) -> Outcome:
            outcome = _first(body(series_sample(seed, kind, ctx.matrix_dim, order)))
            return None if outcome is None else f'seed={seed}: {outcome}'
        return check

    def gp_group(s) -> Dict[str, bool]:
        f, g, h = s['f'], s['g'], s['h']
        one = group.gp_one(order, f.ring)
        return {
            '(fg)h != f(gh)': group.gp_multiply(group.gp_multiply(f, g), h) == group.gp_multiply(f, group.gp_multiply(g, h)),
            '1 f != f': group.gp_multiply(one, f) == f == group.gp_multiply(f, one),
            'f f^-1 != 1': group.gp_multiply(f, group.series_inverse(f)) == one == group.gp_multiply(
                group.series_inverse(f), f),
        }

    def gc_group(s) -> Dict[str, bool]:
        phi, psi, chi = s['phi'], s['psi'], s['chi']
        identity = group.gc_identity(order)
        inverse = group.gc_inverse(phi)
        return {
            '(phi psi) chi != phi (psi chi)':
                group.gc_compose(group.gc_compose(phi, psi), chi) == group.gc_compose(phi, group.gc_compose(psi, chi)),
            'id phi != phi': group.gc_compose(identity, phi) == phi == group.gc_compose(phi, identity),
            'phi phi^-1 != id': group.gc_compose(phi, inverse) == identity == group.gc_compose(inverse, phi),
        }

    def semidirect_group(s) -> Dict[str, bool]:
        a, b, c = (s['phi'], s['f']), (s['psi'], s['g']), (s['chi'], s['h'])
        unit = (group.gc_identity(order), group.gp_one(order, s['f'].ring))
        inverse = group.semidirect_inverse(a)
        return {
            'ассоциативность': group.semidirect_multiply(group.semidirect_multiply(a, b), c)
            == group.semidirect_multiply(a, group.semidirect_multiply(b, c)),
            'единица': group.semidirect_multiply(unit, a) == a == group.semidirect_multiply(a, unit),
            'обратный': group.semidirect_multiply(a, inverse) == unit == group.semidirect_multiply(inverse, a),
        }

    def actions(s) -> Dict[str, bool]:
        f, g, phi, psi = s['f'], s['g'], s['phi'], s['psi']
        return {
            'f^(phi psi) != (f^phi)^psi':
                group.gp_action(f, group.gc_compose(phi, psi)) == group.gp_action(group.gp_action(f, phi), psi),
            '(fg)^phi != f^phi g^phi':
                group.gp_action(group.gp_multiply(f, g), phi)
                == group.gp_multiply(group.gp_action(f, phi), group.gp_action(g, phi)),
            'f^id != f': group.gp_action(f, group.gc_identity(order)) == f,
        }

    def cocycles(s) -> Dict[str, bool]:
        f, phi, psi = s['f'], s['phi'], s['psi']
        s_of = group.divide_by_alpha
        return {
            'тривиальный коцикл': group.cocycle_check(group.trivial_cocycle, phi, psi),
            'коцикл phi/alpha': group.cocycle_check(s_of, phi, psi),
            'возмущённый коцикл прошёл проверку': not group.cocycle_check(group.perturbed_cocycle, phi, psi),
            '(f.phi).psi != f.(phi psi)':
                group.sigma_action(group.sigma_action(f, phi, s_of), psi, s_of)
                == group.sigma_action(f, group.gc_compose(phi, psi), s_of),
        }

    def with_matrix_gc(body: Callable[[Dict], Dict[str, bool]]):
        def swapped(s) -> Dict[str, bool]:
            return body(dict(s, phi=s['matrix_phi'], psi=s['matrix_psi'], chi=s['matrix_chi']))
        return swapped

    for kind in (RingKind.SCALAR, RingKind.MATRIX):
        for name, body in (('gp-group', gp_group), ('gc-group', gc_group), ('semidirect-group', semidirect_group),
                           ('actions', actions), ('cocycle', cocycles)):
            if kind is RingKind.MATRIX and name == 'gc-group':
                # матричная подстановка некоммутативна: нарушение обязано обнаружиться
                laws.append(Law(f'{name}[{kind.value}]', SuiteName.SERIES, seeds,
                                sampled(kind, with_matrix_gc(body)), expected_failure=True))
                continue
            laws.append(Law(f'{name}[{kind.value}]', SuiteName.SERIES, seeds, sampled(kind, body)))
    laws.append(Law('actions-matrix-gc[matrix]', SuiteName.SERIES, seeds,
                    sampled(RingKind.MATRIX, with_matrix_gc(actions)), expected_failure=True))

    return laws


# ----------------------------------------------------------------------------------------------------------------------
#                                           Формулы Дайсона
# ----------------------------------------------------------------------------------------------------------------------


def _dyson_laws(ctx: CheckContext) -> List[Law]:
    seeds = lambda: range(ctx.renorm_seed, ctx.renorm_seed + ctx.renorm_samples)  # noqa: E731
    registry = ctx.registry

    def dyson(kind: RingKind, order: int):
        def check(seed) -> Outcome:
            u_gamma, u_e, c_gamma, c_e = toy_characters(seed, kind, ctx.renorm_dim, order)
            for report in (dyson_check_photon(u_gamma, c_gamma, order, registry),
                           dyson_check_electron(u_e, c_gamma, c_e, order, registry)):
                failure = report.first_failure
                if failure is not None:
                    return (f'seed={seed}: формула Дайсона ({report.particle}) нарушена при alpha^{failure.order}, '
                            f'невязка {failure.ring.render(failure.value)}')
            return None
        return check

    def duality(seed) -> Outcome:
        for tag in (AlgebraTag.H_GAMMA, AlgebraTag.H_E):
            character = make_toy_character(tag, seed, RingKind.MATRIX, ctx.matrix_dim, ctx.renorm_order)
            mismatches = duality_mismatches(character, ctx.renorm_order, registry)
            if mismatches:
                return f'seed={seed}: <U (x) U, Delta^p> != коэффициент квадрата на {render(mismatches[0])}'
        return None

    def triviality(seed) -> Outcome:
        u_gamma, u_e, _, _ = toy_characters(seed, RingKind.SCALAR, ctx.renorm_dim, ctx.renorm_order)
        mismatches = renormalization_triviality(u_gamma, u_e, ctx.renorm_order, registry)
        if mismatches:
            return f'seed={seed}: при нулевых контрчленах R != U на {render(mismatches[0])}'
        return None

    return [
        Law('dyson[scalar]', SuiteName.DYSON, seeds, dyson(RingKind.SCALAR, ctx.renorm_order)),
        Law('dyson[matrix]', SuiteName.DYSON, seeds, dyson(RingKind.MATRIX, ctx.renorm_matrix_order)),
        Law('duality', SuiteName.DYSON, seeds, duality),
        Law('triviality', SuiteName.DYSON, seeds, triviality),
    ]


SUITES: Dict[SuiteName, Callable[[CheckContext], List[Law]]] = {
    SuiteName.TREES: _tree_laws,
    SuiteName.ALGEBRA: _algebra_laws,
    SuiteName.COASSOC: _coassoc_laws,
    SuiteName.COUNIT: _counit_laws,
    SuiteName.ANTIPODE: _antipode_laws,
    SuiteName.COACTION: _coaction_laws,
    SuiteName.COUNTS: _count_laws,
    SuiteName.SERIES: _series_laws,
    SuiteName.DYSON: _dyson_laws,
}


def build_laws(ctx: CheckContext, suite: SuiteName) -> List[Law]:
    """
    Законы набора в фиксированном порядке; all - все наборы подряд
    """
    suite = SuiteName(suite)
    if suite is SuiteName.ALL:
        return [law for factory in SUITES.values() for law in factory(ctx)]
    return SUITES[suite](ctx)
