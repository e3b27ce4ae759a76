
__all__ = [
    "get_logger", "configure_logging",
    "bind_logger_contextvars", "clear_logger_contextvars",
    "LoggerT",
    "log_operation"
]

import structlog

from .main import (
    get_logger, configure_logging,
    bind_logger_contextvars, clear_logger_contextvars
)
from .decorators import (
    log_operation
)

LoggerT = structlog.stdlib.BoundLogger
