"""
Группы усечённых рядов G^p, G^c и их полупрямое произведение
"""
