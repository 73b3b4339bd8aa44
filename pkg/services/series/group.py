"""
Групповые законы G^p, G^c, полупрямого произведения G^c x| G^p и действие через 1-коцикл
"""
from typing import Callable, Tuple

from models.series import GcElement, GpElement, TruncatedSeries
from utils import DomainError


Cocycle = Callable[[TruncatedSeries], TruncatedSeries]
Pair = Tuple[TruncatedSeries, TruncatedSeries]


def gp_multiply(f: TruncatedSeries, g: TruncatedSeries) -> GpElement:
    """
    Поточечное произведение в G^p

    :param f: левый множитель
    :param g: правый множитель
    """
    return GpElement.of(f * g)


def gp_one(order: int, ring=None) -> GpElement:
    return GpElement.of(TruncatedSeries.one(order, ring))


def gc_identity(order: int, ring=None) -> GcElement:
    return GcElement.of(TruncatedSeries.identity(order, ring))


def gc_compose(phi: TruncatedSeries, psi: TruncatedSeries) -> GcElement:
    """
    Произведение в G^c: phi psi = phi(psi(alpha)), так что f^(phi psi) = (f^phi)^psi
    """
    return GcElement.of(phi.compose(psi))


def gp_action(f: TruncatedSeries, phi: TruncatedSeries) -> GpElement:
    """
    Правое действие f^phi = f(phi(alpha))
    """
    return GpElement.of(f.compose(phi))


def series_inverse(f: TruncatedSeries) -> GpElement:
    return GpElement.of(f.inverse())


def gc_inverse(phi: TruncatedSeries) -> GcElement:
    """
    Обратный по подстановке ряд: psi_1 = phi_1^-1, затем psi_n -= phi_1^-1 (phi psi)_n
    """
    phi = GcElement.of(phi)
    ring = phi.ring
    head = ring.inverse(phi[1])
    coeffs = [ring.zero(), head] + [ring.zero()] * (phi.order - 1)
    for n in range(2, phi.order + 1):
        residual = phi.compose(TruncatedSeries(coeffs, phi.order, ring))[n]
        coeffs[n] = coeffs[n] - head * residual

    return GcElement(coeffs, phi.order, ring)


def semidirect_multiply(left: Pair, right: Pair) -> Tuple[GcElement, GpElement]:
    """
    (phi, f) (psi, g) = (phi psi, f^psi g)
    """
    phi, f = left
    psi, g = right
    return gc_compose(phi, psi), gp_multiply(gp_action(f, psi), g)


def semidirect_inverse(pair: Pair) -> Tuple[GcElement, GpElement]:
    """
    (phi, f)^-1 = (phi^-1, (f^(phi^-1))^-1)
    """
    phi, f = pair
    phi_inverse = gc_inverse(phi)
    return phi_inverse, series_inverse(gp_action(f, phi_inverse))


# ----------------------------------------------------------------------------------------------------------------------
#                                           Коциклы
# ----------------------------------------------------------------------------------------------------------------------


def trivial_cocycle(phi: TruncatedSeries) -> GpElement:
    return gp_one(phi.order, phi.ring)


def divide_by_alpha(phi: TruncatedSeries) -> GpElement:
    """
    s(phi) = phi / alpha, порядок усечения уменьшается на единицу
    """
    return GpElement.of(phi.divide_by_alpha())


def perturbed_cocycle(phi: TruncatedSeries) -> GpElement:
    """
    s(phi) (1 + alpha) - не коцикл, для отрицательного контроля
    """
    shift = TruncatedSeries([1, 1], phi.order - 1, phi.ring)
    return gp_multiply(divide_by_alpha(phi), shift)


def cocycle_check(cocycle: Cocycle, phi: TruncatedSeries, psi: TruncatedSeries) -> bool:
    """
    s(psi) [s(phi psi)]^-1 [s(phi)^psi] = 1_p на общем порядке усечения
    """
    if phi.order < 1 or psi.order < 1:
        raise DomainError('Коцикл проверяется на рядах порядка не меньше 1')
    value = cocycle(psi) * series_inverse(cocycle(gc_compose(phi, psi))) * gp_action(cocycle(phi), psi)
    return value == TruncatedSeries.one(value.order, value.ring)


def sigma_action(f: TruncatedSeries, phi: TruncatedSeries, cocycle: Cocycle) -> GpElement:
    """
    f ._sigma phi = f^phi s(phi)
    """
    return gp_multiply(gp_action(f, phi), cocycle(phi))
