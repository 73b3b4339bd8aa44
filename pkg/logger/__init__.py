"""
Пакет средств для логирования: файловые журналы команд и проверок
"""

import logging

from logging import ERROR, WARNING, INFO, DEBUG

from logger.logger import ROOT_DIR, get_logger


# короткие имена уровней в журнале
logging.addLevelName(logging.DEBUG, 'DD')
logging.addLevelName(logging.INFO, 'II')
logging.addLevelName(logging.WARNING, 'WW')
logging.addLevelName(logging.ERROR, 'EE')


__all__ = ('get_logger', 'ROOT_DIR', 'ERROR', 'WARNING', 'INFO', 'DEBUG')
