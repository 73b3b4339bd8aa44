"""
Перенормировка древесных разложений пропагаторов фотона и электрона и проверка формул Дайсона
"""
from fractions import Fraction
from typing import List, Optional, Sequence

from enums import AlgebraTag, ExpansionKind
from logger import get_logger
from models.characters import Character, PropagatorExpansion, evaluate
from models.elements import AlgebraElement, TensorElement, embed_tree
from models.ring import RingValue, common_ring
from models.series import GcElement, GpElement, TruncatedSeries
from models.trees import Tree, over, trees_up_to, under
from services.enums import MapName
from services.registry import MapRegistry, default_registry
from utils import CharacterError


LOGGER = get_logger(__name__)


def pair_evaluate(characters: Sequence[Character], x: TensorElement) -> RingValue:
    """
    <chi_1 (x) ... (x) chi_k, T>: значения на слотах перемножаются слева направо в порядке слотов

    :param characters: по характеру на каждый слот
    :param x: тензор
    """
    if len(characters) != len(x.tags):
        raise CharacterError(f'Характеров {len(characters)}, а слотов {len(x.tags)}')
    for character, tag in zip(characters, x.tags):
        if character.tag is not tag:
            raise CharacterError(f'Характер на {character.tag.value} применён к слоту {tag.value}')

    ring = common_ring(*(character.ring for character in characters))
    value = ring.zero()
    for key, coeff in x.terms.items():
        term = ring.coerce(coeff)
        for character, word in zip(characters, key):
            term = term * ring.coerce(character.word(word))
        value = value + term

    return value


def z3_series(c_gamma: Character, order: int) -> GpElement:
    """
    Z_3 = 1 - sum_t C^gamma(V(t)) alpha^(|t|+1)

    :param c_gamma: характер на H^alpha
    :param order: порядок усечения
    """
    ring = c_gamma.ring
    coeffs = [ring.one()] + [ring.zero()] * order
    for tree in trees_up_to(order - 1):
        coeffs[tree.order + 1] = coeffs[tree.order + 1] - c_gamma.word((tree,))

    return GpElement(coeffs, order, ring)


def z2_series(c_e: Character, order: int, registry: Optional[MapRegistry] = None) -> GpElement:
    """
    Ряд 1 + sum_{t != e} C^e(S^p_e(t)) alpha^|t|; это обратный фактор Z_2^-1

    :param c_e: характер на H^e
    :param order: порядок усечения
    :param registry: реестр отображений (антипод S^p_e)
    """
    antipode = (registry or default_registry())[MapName.ANTIPODE_P_E]
    ring = c_e.ring
    coeffs = [ring.one()] + [ring.zero()] * order
    for tree in trees_up_to(order, start=1):
        coeffs[tree.order] = coeffs[tree.order] + evaluate(c_e, antipode(embed_tree(AlgebraTag.H_E, tree)))

    return GpElement(coeffs, order, ring)


def ward_alpha0(z3: TruncatedSeries) -> GcElement:
    """
    Закон Уорда alpha_0(alpha) = alpha Z_3(alpha)^-1
    """
    return GcElement.of(TruncatedSeries.identity(z3.order, z3.ring) * z3.inverse())


def renormalized_photon(u_gamma: Character, c_gamma: Character, tree: Tree,
                        registry: Optional[MapRegistry] = None) -> RingValue:
    """
    R^gamma(t) = sum U^gamma(t') C^gamma(t'') по Delta^gamma(t)
    """
    delta_gamma = (registry or default_registry())[MapName.DELTA_GAMMA]
    return pair_evaluate((u_gamma, c_gamma), delta_gamma(embed_tree(AlgebraTag.H_GAMMA, tree)))


def renormalized_electron(u_e: Character, c_gamma: Character, c_e: Character, tree: Tree,
                          registry: Optional[MapRegistry] = None) -> RingValue:
    """
    R^e(t) = sum U^e(t') C^gamma(t'') C^e(S^p_e t''') по Delta^e(t), произведение строго слева направо
    """
    registry = registry or default_registry()
    delta_e = registry[MapName.DELTA_E]
    antipode = registry[MapName.ANTIPODE_P_E]
    ring = common_ring(u_e.ring, c_gamma.ring, c_e.ring)
    value = ring.zero()
    for (first, alpha, last), coeff in delta_e(embed_tree(AlgebraTag.H_E, tree)).terms.items():
        twisted = evaluate(c_e, antipode(AlgebraElement._raw(AlgebraTag.H_E, {last: Fraction(1)})))
        value = value + ring.coerce(coeff) * ring.coerce(u_e.word(first)) * ring.coerce(c_gamma.word(alpha)) \
            * ring.coerce(twisted)

    return value


# ----------------------------------------------------------------------------------------------------------------------
#                                           Формулы Дайсона
# ----------------------------------------------------------------------------------------------------------------------


class Residual:
    """
    Разность сторон тождества при alpha^n
    """
    __slots__ = ('order', 'value', 'ring')

    def __init__(self, order: int, value: RingValue, ring):
        self.order = order
        self.value = value
        self.ring = ring

    @property
    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)


class DysonReport:
    """
    Покоэффициентное сравнение сторон формулы Дайсона
    """

    def __init__(self, particle: str, order: int, lhs: TruncatedSeries, rhs: TruncatedSeries):
        self.particle = particle
        self.order = order
        self.lhs = lhs
        self.rhs = rhs
        difference = lhs - rhs
        self.residuals: List[Residual] = [Residual(n, difference[n], difference.ring)
                                          for n in range(difference.order + 1)]

    @property
    def passed(self) -> bool:
        return all(residual.is_zero for residual in self.residuals)

    @property
    def first_failure(self) -> Optional[Residual]:
        return next((residual for residual in self.residuals if not residual.is_zero), None)

    def log(self):
        failure = self.first_failure
        if failure is None:
            LOGGER.info('Формула Дайсона (%s) выполнена до alpha^%d', self.particle, self.order)
        else:
            LOGGER.error('Формула Дайсона (%s) нарушена при alpha^%d: невязка %s', self.particle, failure.order,
                         failure.ring.render(failure.value))


def dyson_check_photon(u_gamma: Character, c_gamma: Character, order: int,
                       registry: Optional[MapRegistry] = None) -> DysonReport:
    """
    D_bar(alpha) Z_3(alpha) = D(alpha_0(alpha))

    :param u_gamma: характер U^gamma на H^gamma
    :param c_gamma: характер C^gamma на H^alpha
    :param order: порядок усечения N
    :param registry: реестр отображений
    """
    ring = common_ring(u_gamma.ring, c_gamma.ring)
    z3 = z3_series(c_gamma, order)
    alpha0 = ward_alpha0(z3)
    bare = PropagatorExpansion.from_character(u_gamma, order, ExpansionKind.BARE_PHOTON)
    renormalized = PropagatorExpansion.from_function(
        order, lambda tree: renormalized_photon(u_gamma, c_gamma, tree, registry), ring,
        ExpansionKind.RENORMALIZED_PHOTON)
    report = DysonReport('photon', order, renormalized.assemble() * z3, bare.assemble().compose(alpha0))
    report.log()
    return report


def dyson_check_electron(u_e: Character, c_gamma: Character, c_e: Character, order: int,
                         registry: Optional[MapRegistry] = None) -> DysonReport:
    """
    S_bar(alpha) Z_2(alpha) = S(alpha_0(alpha)), Z_2 = (1 + sum C^e(S^p_e t) alpha^|t|)^-1
    """
    ring = common_ring(u_e.ring, c_gamma.ring, c_e.ring)
    z2 = z2_series(c_e, order, registry).inverse()
    alpha0 = ward_alpha0(z3_series(c_gamma, order))
    bare = PropagatorExpansion.from_character(u_e, order, ExpansionKind.BARE_ELECTRON)
    renormalized = PropagatorExpansion.from_function(
        order, lambda tree: renormalized_electron(u_e, c_gamma, c_e, tree, registry), ring,
        ExpansionKind.RENORMALIZED_ELECTRON)
    report = DysonReport('electron', order, renormalized.assemble() * z2, bare.assemble().compose(alpha0))
    report.log()
    return report


# ----------------------------------------------------------------------------------------------------------------------
#                                           Двойственность и тривиальность
# ----------------------------------------------------------------------------------------------------------------------


def duality_mismatches(character: Character, order: int, registry: Optional[MapRegistry] = None) -> List[Tree]:
    """
    Деревья, на которых <chi (x) chi, Delta^p(t)> расходится с древесным коэффициентом квадрата разложения
    (произведение / для H^gamma, \\ для H^e)
    """
    registry = registry or default_registry()
    if character.tag is AlgebraTag.H_GAMMA:
        coproduct, product = registry[MapName.DELTA_P_GAMMA], over
    else:
        coproduct, product = registry[MapName.DELTA_P_E], under
    expansion = PropagatorExpansion.from_character(character, order)
    square = expansion.tree_product(expansion, product)

    mismatches = []
    for tree in trees_up_to(order):
        paired = pair_evaluate((character, character),
                               coproduct(embed_tree(character.tag, tree)))
        if paired != square[tree]:
            mismatches.append(tree)

    return mismatches


def renormalization_triviality(u_gamma: Character, u_e: Character, order: int,
                               registry: Optional[MapRegistry] = None) -> List[Tree]:
    """
    Деревья, на которых при нулевых контрчленах R != U (пустой список - тривиальность выполнена)
    """
    zero_gamma = Character.zero(AlgebraTag.H_ALPHA, u_gamma.ring)
    zero_e = Character.zero(AlgebraTag.H_E, u_e.ring)
    mismatches = []
    for tree in trees_up_to(order):
        if tree.is_root:
            continue
        if renormalized_photon(u_gamma, zero_gamma, tree, registry) != u_gamma.word((tree,)) \
                or renormalized_electron(u_e, zero_gamma, zero_e, tree, registry) != u_e.word((tree,)):
            mismatches.append(tree)

    return mismatches
