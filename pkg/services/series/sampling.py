"""
Случайные элементы колец и групп рядов с воспроизводимым зерном
"""
from fractions import Fraction
from random import Random

from models.ring import Ring, RingValue, ScalarRing
from models.series import GcElement, GpElement
from utils import RingError


NUMERATOR = 5
DENOMINATOR = 4
ATTEMPTS = 100


def random_fraction(rng: Random) -> Fraction:
    return Fraction(rng.randint(-NUMERATOR, NUMERATOR), rng.randint(1, DENOMINATOR))


def random_ring_value(rng: Random, ring: Ring = None) -> RingValue:
    """
    Случайный элемент кольца с небольшими рациональными элементами

    :param rng: генератор случайных чисел
    :param ring: кольцо, по умолчанию скалярное
    """
    ring = ring or ScalarRing()
    if ring.dim == 1:
        return ring.coerce(random_fraction(rng))

    return ring.coerce([[random_fraction(rng) for _ in range(ring.dim)] for _ in range(ring.dim)])


def random_invertible(rng: Random, ring: Ring = None) -> RingValue:
    ring = ring or ScalarRing()
    for _ in range(ATTEMPTS):
        value = random_ring_value(rng, ring)
        try:
            ring.inverse(value)
        except RingError:
            continue
        return value

    raise RingError(f'Не удалось выбрать обратимый элемент {ring!r}')


def random_gp(rng: Random, order: int, ring: Ring = None) -> GpElement:
    """
    Случайный элемент G^p: обратимый свободный член, остальные коэффициенты произвольны
    """
    ring = ring or ScalarRing()
    coeffs = [random_invertible(rng, ring)] + [random_ring_value(rng, ring) for _ in range(order)]
    return GpElement(coeffs, order, ring)


def random_gc(rng: Random, order: int, ring: Ring = None) -> GcElement:
    """
    Случайный элемент G^c: нулевой свободный член, обратимый линейный
    """
    ring = ring or ScalarRing()
    coeffs = [ring.zero(), random_invertible(rng, ring)] + [random_ring_value(rng, ring) for _ in range(order - 1)]
    return GcElement(coeffs, order, ring)
