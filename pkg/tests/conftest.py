"""
Общие фикстуры и профиль hypothesis
"""
import pytest
from hypothesis import HealthCheck, settings

from services.registry import default_registry


settings.register_profile('default', max_examples=60, deadline=None, derandomize=True,
                          suppress_health_check=(HealthCheck.too_slow,))
settings.load_profile('default')


@pytest.fixture(scope='session')
def registry():
    return default_registry()
