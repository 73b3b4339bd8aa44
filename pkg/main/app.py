"""
Модуль создания экземпляра приложения
"""
import click

from configs import configs
from logger import get_logger
from resources import PublicCLI


LOGGER = get_logger(__name__)


def create_app() -> click.Group:
    """
    Создание группы команд со всеми зарегистрированными ресурсами
    """

    @click.group('qedtrees', context_settings={'help_option_names': ['-h', '--help']})
    def app():
        """
        Алгебры Хопфа КЭД на плоских бинарных деревьях
        """
        LOGGER.debug('Режим %s', configs.get('mode'))

    # регистрация команд всех областей
    for api in PublicCLI.CLI_SET:
        for command in api.command_list:
            app.add_command(command)

    return app
