"""
Наборы проверок алгебраических законов
"""
