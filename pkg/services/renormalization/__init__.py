"""
Характеры, древесные разложения пропагаторов и проверка формул Дайсона
"""
