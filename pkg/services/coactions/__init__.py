"""
Кодействия алгебры заряда, полупрямые копроизведения и кодействия перенормировки
"""
