"""Decorators for logging
"""

__all__ = [
    "log_operation",
]

import functools
import typing
from typing import Optional as Opt

from ..utils import args_to_kwargs_by_sig
from .main import get_logger


P = typing.ParamSpec("P")
R = typing.TypeVar("R")


def log_operation(
    func: Opt[typing.Callable[P, R]] = None,
    *,
    exclude: typing.Iterable[str] = (),
    summarize: Opt[typing.Callable[[typing.Any], typing.Any]] = None,
):

    """Decorator for logging public operations

    Features
    --------
    - Log enterance and parameters
    - Log exitance and a summary of the return value
    - Bind an operation level logger (``operation=<qualname>``)

    Excluded Parameters
    ^^^^^^^^^^^^^^^^^^^
    Parameters named in ``exclude`` will not be logged (long grids
    for example).

    :param summarize: maps the return value to something small enough
        to log; the return value is not logged when omitted.
    """

    def decorator(func: typing.Callable[P, R]) -> typing.Callable[P, R]:
        func_name = func.__qualname__
        logger = get_logger(func.__module__).bind(operation=func_name)
        excluded = set(exclude)

        @functools.wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            to_log_parameters = dict(kwargs)
            if args:
                to_log_parameters.update(args_to_kwargs_by_sig(func, *args))
            for name in excluded:
                to_log_parameters.pop(name, None)

            logger.debug("Enter operation", parameters={
                k: str(v) for k, v in to_log_parameters.items()
            })
            result = func(*args, **kwargs)
            if summarize is not None:
                logger.debug("Exit operation", result=summarize(result))
            else:
                logger.debug("Exit operation")
            return result

        return wrapper

    if func is not None:
        return decorator(func)
    return decorator
