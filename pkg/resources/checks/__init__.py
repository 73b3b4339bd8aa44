"""
Пакет ресурса проверки законов
"""
from resources.checks.resources import run_check


__all__ = ('run_check', )
