import logging
import typing
from typing import Optional as Opt
from ...setting import EnvSetting, make_setting_singleton


class LogSetting(EnvSetting):

    _setting_name = "log"

    log_level: int = logging.WARNING
    log_file: Opt[str] = None
    cache_logger_on_first_use: bool = False


get_setting, set_setting = make_setting_singleton(LogSetting.load())
