"""
Усечённые формальные степенные ряды по константе связи alpha
"""
from typing import List, Sequence

from models.ring import Ring, RingValue, ScalarRing, common_ring
from utils import DomainError, RingError


class TruncatedSeries:
    """
    Ряд c_0 + c_1 alpha + ... + c_N alpha^N с коэффициентами в кольце ring.

    Все операции отбрасывают степени выше N; при смешении порядков берётся меньший,
    скалярный ряд при смешении с матричным вкладывается как кратный единичной.
    """
    __slots__ = ('order', 'ring', 'coeffs')

    def __init__(self, coeffs: Sequence, order: int = None, ring: Ring = None):
        self.ring = ring or ScalarRing()
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise DomainError(f'Некорректный порядок усечения {order}')
        self.order = order
        values = [self.ring.coerce(c) for c in list(coeffs)[:order + 1]]
        values += [self.ring.zero()] * (order + 1 - len(values))
        self.coeffs = tuple(values)

    @classmethod
    def one(cls, order: int, ring: Ring = None) -> 'TruncatedSeries':
        ring = ring or ScalarRing()
        return cls([ring.one()], order, ring)

    @classmethod
    def identity(cls, order: int, ring: Ring = None) -> 'TruncatedSeries':
        """
        Ряд alpha
        """
        ring = ring or ScalarRing()
        return cls([ring.zero(), ring.one()], order, ring)

    @classmethod
    def zero(cls, order: int, ring: Ring = None) -> 'TruncatedSeries':
        return cls([], order, ring)

    def __getitem__(self, n: int) -> RingValue:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f'TruncatedSeries(N={self.order}, [{", ".join(self.ring.render(c) for c in self.coeffs)}])'

    def truncate(self, order: int) -> 'TruncatedSeries':
        return TruncatedSeries(self.coeffs, min(order, self.order), self.ring)

    def to_ring(self, ring: Ring) -> 'TruncatedSeries':
        if ring == self.ring:
            return self
        return TruncatedSeries([ring.coerce(c) for c in self.coeffs], self.order, ring)

    def _align(self, other: 'TruncatedSeries'):
        ring = common_ring(self.ring, other.ring)
        order = min(self.order, other.order)
        return self.to_ring(ring).truncate(order), other.to_ring(ring).truncate(order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        left, right = self._align(other)
        return left.coeffs == right.coeffs

    def __add__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        left, right = self._align(other)
        return TruncatedSeries([a + b for a, b in zip(left, right)], left.order, left.ring)

    def __sub__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        left, right = self._align(other)
        return TruncatedSeries([a - b for a, b in zip(left, right)], left.order, left.ring)

    def __neg__(self) -> 'TruncatedSeries':
        return TruncatedSeries([-a for a in self.coeffs], self.order, self.ring)

    def __mul__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        """
        Произведение Коши, коэффициенты левого множителя стоят слева
        """
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        left, right = self._align(other)
        ring = left.ring
        coeffs = []
        for n in range(left.order + 1):
            value = ring.zero()
            for k in range(n + 1):
                value = value + left[k] * right[n - k]
            coeffs.append(value)

        return TruncatedSeries(coeffs, left.order, ring)

    def scale(self, value: RingValue) -> 'TruncatedSeries':
        """
        Умножение слева на элемент кольца
        """
        value = self.ring.coerce(value)
        return TruncatedSeries([value * c for c in self.coeffs], self.order, self.ring)

    def power(self, n: int) -> 'TruncatedSeries':
        result = TruncatedSeries.one(self.order, self.ring)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> 'TruncatedSeries':
        """
        Мультипликативно обратный ряд: g_0 = f_0^-1, g_n = -f_0^-1 sum_{k>=1} f_k g_{n-k}
        """
        ring = self.ring
        head = ring.inverse(self.coeffs[0])
        coeffs: List[RingValue] = [head]
        for n in range(1, self.order + 1):
            value = ring.zero()
            for k in range(1, n + 1):
                value = value + self.coeffs[k] * coeffs[n - k]
            coeffs.append(-(head * value))

        return TruncatedSeries(coeffs, self.order, ring)

    def compose(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        """
        Подстановка f(phi(alpha)) = sum f_n phi^n, коэффициенты f_n стоят слева

        :param other: ряд phi с нулевым свободным членом
        """
        if not other.ring.is_zero(other.coeffs[0]):
            raise DomainError('Подставляемый ряд должен иметь нулевой свободный член')
        left, right = self._align(other)
        result = TruncatedSeries.zero(left.order, left.ring)
        power = TruncatedSeries.one(left.order, left.ring)
        for n in range(left.order + 1):
            result = result + power.scale(left[n])
            power = power * right

        return result

    def divide_by_alpha(self) -> 'TruncatedSeries':
        """
        Ряд f / alpha для f с нулевым свободным членом, порядок усечения уменьшается на единицу
        """
        if not self.ring.is_zero(self.coeffs[0]):
            raise DomainError('Деление на alpha требует нулевого свободного члена')
        if self.order == 0:
            raise DomainError('Ряд нулевого порядка нельзя разделить на alpha')

        return TruncatedSeries(self.coeffs[1:], self.order - 1, self.ring)

    def first_difference(self, other: 'TruncatedSeries'):
        """
        Наименьшая степень, в которой ряды различаются, и разность коэффициентов; None при совпадении
        """
        left, right = self._align(other)
        for n, (a, b) in enumerate(zip(left, right)):
            if not left.ring.is_zero(a - b):
                return n, a - b

        return None


def _require(condition: bool, message: str):
    if not condition:
        raise RingError(message)


class GpElement(TruncatedSeries):
    """
    Элемент группы пропагаторов G^p: обратимый свободный член
    """
    __slots__ = ()

    def __init__(self, coeffs: Sequence, order: int = None, ring: Ring = None):
        TruncatedSeries.__init__(self, coeffs, order, ring)
        try:
            self.ring.inverse(self.coeffs[0])
        except RingError as error:
            raise RingError('Свободный член элемента G^p должен быть обратим') from error

    @classmethod
    def of(cls, series: TruncatedSeries) -> 'GpElement':
        return cls(series.coeffs, series.order, series.ring)


class GcElement(TruncatedSeries):
    """
    Элемент группы G^c замен константы связи: нулевой свободный член и обратимый линейный
    """
    __slots__ = ()

    def __init__(self, coeffs: Sequence, order: int = None, ring: Ring = None):
        TruncatedSeries.__init__(self, coeffs, order, ring)
        _require(self.order >= 1, 'Элемент G^c имеет порядок усечения не меньше 1')
        _require(self.ring.is_zero(self.coeffs[0]), 'Свободный член элемента G^c должен быть нулевым')
        try:
            self.ring.inverse(self.coeffs[1])
        except RingError as error:
            raise RingError('Линейный член элемента G^c должен быть обратим') from error

    @classmethod
    def of(cls, series: TruncatedSeries) -> 'GcElement':
        return cls(series.coeffs, series.order, series.ring)
