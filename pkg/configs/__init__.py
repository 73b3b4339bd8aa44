"""
Пакет для чтения конфигурационного файла в формате yaml
"""
import os

from yaml import load, Loader


CONFIG_FILE = 'config.yaml'
CONFIG_ENV = 'QEDTREES_CONFIG'

cp = os.path.dirname(os.path.abspath(__file__))
config_path = os.environ.get(CONFIG_ENV) or os.path.join(cp, CONFIG_FILE)
try:
    with open(config_path, 'r', encoding='utf-8') as f:
        configs = load(f, Loader) or {}
except FileNotFoundError as e:
    raise FileNotFoundError(f'Конфигурационный файл {os.path.abspath(config_path)} не найден системой') from e


def section(name: str) -> dict:
    """
    Раздел конфигурации, пустой словарь при его отсутствии

    :param name: имя раздела
    """
    return configs.get(name) or {}
