"""
Пакет моделей: деревья, элементы алгебр, кольца, ряды и характеры
"""

from .elements import AlgebraElement, TensorElement
from .series import GcElement, GpElement, TruncatedSeries
from .trees import E, Y, Tree


__all__ = ('Tree', 'E', 'Y', 'AlgebraElement', 'TensorElement', 'TruncatedSeries', 'GpElement', 'GcElement')
