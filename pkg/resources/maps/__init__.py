"""
Пакет ресурса структурных отображений
"""
from resources.maps.resources import apply_map, list_maps


__all__ = ('apply_map', 'list_maps')
