"""
Пакет ресурса перечисления деревьев
"""
from resources.trees.resources import enum_trees


__all__ = ('enum_trees', )
