"""
Пакет ресурса перенормировки
"""
from resources.renorm.resources import renormalize


__all__ = ('renormalize', )
