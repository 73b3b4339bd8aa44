"""
Пакет CLI ресурсов: регистрация команд по областям
"""
from resources.checks import run_check
from resources.maps import apply_map, list_maps
from resources.renorm import renormalize
from resources.trees import enum_trees


__all__ = ('PublicCLI',)


class PublicCLI:
    """
    Группа команд одной области с сохранением в общий реестр
    для автоматической регистрации в приложении
    """
    CLI_SET = []

    def __init__(self, name: str):
        self.name = name
        self.command_list = []
        self.CLI_SET.append(self)

    def add_command(self, command):
        """
        Добавление команды с сохранением в список области
        """
        self.command_list.append(command)


# Регистрация ресурсов

# Перечисление деревьев
cli_trees = PublicCLI('trees')
cli_trees.add_command(enum_trees)

# Структурные отображения
cli_maps = PublicCLI('maps')
cli_maps.add_command(apply_map)
cli_maps.add_command(list_maps)

# Проверка законов
cli_checks = PublicCLI('checks')
cli_checks.add_command(run_check)

# Перенормировка
cli_renorm = PublicCLI('renorm')
cli_renorm.add_command(renormalize)
