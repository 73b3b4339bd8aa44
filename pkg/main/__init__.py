"""
Главный модуль проекта
"""

__all__ = ('app', 'cache')
