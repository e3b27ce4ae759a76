"""Grid evaluation, sequential or on a thread pool.

Results always come back in input order.
"""

__all__ = [
    "map_ordered",
]

import concurrent.futures
import typing
from typing import Optional as Opt

from ..data.settings.analysis import get_setting as get_analysis_setting


T = typing.TypeVar("T")
R = typing.TypeVar("R")


def map_ordered(
    func: typing.Callable[[T], R],
    items: typing.Iterable[T],
    max_workers: Opt[int] = None,
) -> typing.List[R]:

    """``[func(item) for item in items]``, possibly in parallel

    :param max_workers: defaults to the analysis setting; 1 runs inline
    """
    items = list(items)
    if max_workers is None:
        max_workers = get_analysis_setting().max_workers
    if max_workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(func, items))
