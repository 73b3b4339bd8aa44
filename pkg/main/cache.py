"""
Кэши структурных отображений
"""
from threading import RLock

from cachetools import LRUCache
from cachetools.keys import hashkey

from configs import section


DEFAULT_CACHE_SIZE = 65536


def make_cache(maxsize: int = None) -> LRUCache:
    """
    LRU кэш образов базисных элементов; размер по умолчанию берётся из конфигурации

    :param maxsize: максимальное число записей
    """
    return LRUCache(maxsize=maxsize or section('algebra').get('cache_size') or DEFAULT_CACHE_SIZE)


class MapCache:
    """
    Кэш одного экземпляра отображения: LRU кэш и реентерабельная блокировка для рекурсивных вычислений
    """
    __slots__ = ('cache', 'lock')

    def __init__(self, maxsize: int = None):
        self.cache = make_cache(maxsize)
        self.lock = RLock()

    def clear(self):
        with self.lock:
            self.cache.clear()

    def lookup(self, kind: str, key, compute):
        """
        Значение из кэша; при промахе вычисляется compute(key) вне блокировки и сохраняется

        :param kind: пространство ключей (образы слов и образы букв хранятся раздельно)
        :param key: ключ
        :param compute: функция вычисления по ключу
        """
        cache_key = hashkey(kind, key)
        with self.lock:
            try:
                return self.cache[cache_key]
            except KeyError:
                pass
        value = compute(key)
        with self.lock:
            self.cache[cache_key] = value
        return value
