"""
Кольца коэффициентов: точные рациональные числа и матрицы d x d над ними (sympy)
"""
from fractions import Fraction
from typing import Union

from sympy import ImmutableMatrix, Rational, eye, zeros

from enums import RingKind
from utils import RingError, format_fraction, to_fraction


RingValue = Union[Fraction, ImmutableMatrix]


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


class ScalarRing:
    """
    Поле рациональных чисел
    """
    kind = RingKind.SCALAR
    dim = 1

    def __eq__(self, other):
        return isinstance(other, ScalarRing)

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return 'ScalarRing()'

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, ImmutableMatrix):
            raise RingError('Матрица не может быть скаляром')
        if isinstance(value, Rational):
            return Fraction(int(value.p), int(value.q))
        return to_fraction(value)

    def is_zero(self, value: Fraction) -> bool:
        return value == 0

    def inverse(self, value: Fraction) -> Fraction:
        if value == 0:
            raise RingError('Нулевой элемент необратим')
        return 1 / value

    def is_scalar(self, value: Fraction) -> bool:
        return True

    def as_scalar(self, value: Fraction) -> Fraction:
        return value

    def commute(self, left: Fraction, right: Fraction) -> bool:
        return True

    def dump(self, value: Fraction):
        return format_fraction(value)

    def render(self, value: Fraction) -> str:
        return format_fraction(value)


class MatrixRing:
    """
    Кольцо матриц d x d с рациональными элементами, скаляры вкладываются как кратные единичной
    """
    kind = RingKind.MATRIX

    def __init__(self, dim: int = 4):
        if dim < 1:
            raise RingError(f'Некорректный размер матриц {dim}')
        self.dim = dim
        self._zero = ImmutableMatrix(zeros(dim, dim))
        self._one = ImmutableMatrix(eye(dim))

    def __eq__(self, other):
        return isinstance(other, MatrixRing) and other.dim == self.dim

    def __hash__(self):
        return hash((self.kind, self.dim))

    def __repr__(self):
        return f'MatrixRing({self.dim})'

    def zero(self) -> ImmutableMatrix:
        return self._zero

    def one(self) -> ImmutableMatrix:
        return self._one

    def coerce(self, value) -> ImmutableMatrix:
        if isinstance(value, ImmutableMatrix):
            if value.shape != (self.dim, self.dim):
                raise RingError(f'Размер матрицы {value.shape} не совпадает с {(self.dim, self.dim)}')
            return value
        if isinstance(value, (list, tuple)):
            rows = [[_rational(to_fraction(entry)) for entry in row] for row in value]
            return self.coerce(ImmutableMatrix(rows))
        if isinstance(value, Rational):
            return self._one * value
        return self._one * _rational(to_fraction(value))

    def is_zero(self, value: ImmutableMatrix) -> bool:
        return all(entry == 0 for entry in value)

    def inverse(self, value: ImmutableMatrix) -> ImmutableMatrix:
        if value.det() == 0:
            raise RingError('Вырожденная матрица необратима')
        return ImmutableMatrix(value.inv())

    def is_scalar(self, value: ImmutableMatrix) -> bool:
        return value == self._one * value[0, 0]

    def as_scalar(self, value: ImmutableMatrix) -> Fraction:
        if not self.is_scalar(value):
            raise RingError('Матрица не кратна единичной')
        return ScalarRing().coerce(value[0, 0])

    def commute(self, left: ImmutableMatrix, right: ImmutableMatrix) -> bool:
        return left * right == right * left

    def dump(self, value: ImmutableMatrix):
        return [[format_fraction(ScalarRing().coerce(entry)) for entry in value.row(i)] for i in range(self.dim)]

    def render(self, value: ImmutableMatrix) -> str:
        return '[' + '; '.join(' '.join(row) for row in self.dump(value)) + ']'


Ring = Union[ScalarRing, MatrixRing]


def make_ring(kind: RingKind = RingKind.SCALAR, dim: int = 4) -> Ring:
    """
    Кольцо по его виду

    :param kind: scalar или matrix
    :param dim: размер матриц
    """
    if RingKind(kind) is RingKind.MATRIX:
        return MatrixRing(dim)

    return ScalarRing()


def common_ring(*rings: Ring) -> Ring:
    """
    Кольцо, в которое вкладываются все данные: скалярное вкладывается в матричное
    """
    matrices = {ring for ring in rings if ring.kind is RingKind.MATRIX}
    if len(matrices) > 1:
        raise RingError(f'Несовместимые размеры матриц: {sorted(ring.dim for ring in matrices)}')

    return matrices.pop() if matrices else ScalarRing()
