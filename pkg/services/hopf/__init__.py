"""
Алгебры Хопфа деревьев: копроизведения обрезания, алгебра заряда и их антиподы
"""
