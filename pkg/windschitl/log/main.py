'''Windschitl logging module

See :doc:`/design/observability/log`
'''

import logging
import sys
import typing
import structlog
from ..data.settings.log import LogSetting, get_setting as get_log_setting

if typing.TYPE_CHECKING:
    from . import LoggerT


def _processors() -> typing.List[typing.Any]:
    return [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.processors.TimeStamper(fmt="iso", key="datetime"),
        structlog.processors.dict_tracebacks,
        structlog.processors.CallsiteParameterAdder(
            parameters=[
                structlog.processors.CallsiteParameter.FILENAME,
                structlog.processors.CallsiteParameter.LINENO,
            ]
        ),
        structlog.processors.JSONRenderer(),
    ]


def configure_logging(setting: typing.Optional[LogSetting] = None) -> None:

    """Route JSON logs through stdlib logging

    Logs go to ``log_file`` when set, stderr otherwise; stdout carries
    command output only.
    """
    setting = setting or get_log_setting()
    if setting.log_file is not None:
        logging.basicConfig(level=setting.log_level, filename=setting.log_file)
    else:
        logging.basicConfig(level=setting.log_level, stream=sys.stderr)

    structlog.configure(
        processors=_processors(),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=setting.cache_logger_on_first_use,
    )


configure_logging()


def get_logger(name) -> "LoggerT":
    return structlog.get_logger(name)

def bind_logger_contextvars(**contextvars) -> None:
    structlog.contextvars.bind_contextvars(**contextvars)

def clear_logger_contextvars() -> None:
    structlog.contextvars.clear_contextvars()
