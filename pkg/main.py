"""
Запуск CLI qedtrees
"""
import sentry_sdk

from configs import configs, section
from main.app import create_app


sentry_cfg = section('sentry')
if env := sentry_cfg.get('env'):
    sentry_sdk.init(
        dsn=sentry_cfg.get('dsn'),
        environment=env,
        release=f'qedtrees@{configs.get("mode", "dev")}',
        traces_sample_rate=0.0,
    )


application = create_app()


if __name__ == '__main__':
    application(prog_name='qedtrees')
