"""
модуль с функцие получения логировщика
"""

import logging
from os import path, makedirs
from typing import Optional

from logging.handlers import TimedRotatingFileHandler

from configs import section


ff = logging.Formatter(fmt='%(asctime)s [%(levelname)s] %(name)s: %(message)s', datefmt='%Y-%m-%d %H:%M:%S')

ROOT_DIR = path.split(path.dirname(path.abspath(__file__)))[0]


def get_logger(name: str, file_name: Optional[str] = None, level: Optional[int] = None):
    """
    Функция формирует объект логировщика для записи данных о работе приложения в файл

    :param name: имя логировщика
    :param file_name: имя файла, в который будут записываться логи (по умолчанию из конфигурации)
    :param level: уровень записи информации (по умолчанию из конфигурации)
    :return: объект логировщика
    """
    log_cfg = section('logging')
    if level is None:
        level = logging.getLevelName(str(log_cfg.get('level', 'INFO')).upper())
        if not isinstance(level, int):
            level = logging.INFO
    file_name = file_name or log_cfg.get('file', 'qedtrees')

    logs_dir = path.join(ROOT_DIR, log_cfg.get('dir', 'logs'))
    makedirs(logs_dir, exist_ok=True)
    logs_path = path.join(logs_dir, file_name + '.log')

    logger = logging.getLogger(name)
    logger.setLevel(level)
    if not logger.handlers:
        handler = TimedRotatingFileHandler(logs_path,
                                           when='D',
                                           interval=1,
                                           backupCount=30,
                                           encoding='utf-8',
                                           delay=True)
        handler.setLevel(level)
        handler.setFormatter(ff)
        logger.addHandler(handler)
        # сообщения не дублируются в корневой логировщик и консоль CLI
        logger.propagate = False

    return logger
