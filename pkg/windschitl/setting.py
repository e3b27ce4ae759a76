"""Windschitl Setting Module

Settings are plain classes whose annotated class attributes are the
fields (the class attribute value is the default).
"""

__all__ = [
    "Setting",
    "EnvSetting",
    "make_setting_singleton",
]

import os
import typing
from typing import Optional as Opt

from .utils import try_convert_str


ENV_PREFIX = "WINDSCHITL"


class Setting:

    """Setting base class.

    Example
    ^^^^^^^

    .. code-block:: python

        class MySetting(Setting):

            _setting_name = "my"

            precision: int = 256
            log_file: Opt[str] = None

        MySetting(precision=512).precision  # 512
    """

    _setting_name: typing.ClassVar[str] = ""
    """配置名称"""

    def __init__(self, **overrides: typing.Any) -> None:
        fields = self.fields()
        unknown = set(overrides) - set(fields)
        if unknown:
            raise ValueError(
                f"unknown field(s) for setting {self._setting_name}: {sorted(unknown)}"
            )
        for name in fields:
            value = overrides.get(name, getattr(type(self), name, None))
            setattr(self, name, value)

    @classmethod
    def fields(cls) -> typing.Dict[str, typing.Any]:
        """Field names and their annotations, base classes first.
        """
        fields: typing.Dict[str, typing.Any] = {}
        for klass in reversed(cls.__mro__):
            for name, anno in getattr(klass, "__annotations__", {}).items():
                if name.startswith("_"):
                    continue
                fields[name] = anno
        return fields

    def dump_to_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.fields()}

    def __repr__(self) -> str:
        body = ",".join(f"{k}={v!r}" for k, v in self.dump_to_dict().items())
        return f"{self.__class__.__name__}({body})"

    @classmethod
    def load(cls):
        return cls()


class EnvSetting(Setting):

    """Load setting from environment variables.

    Variable name is ``WINDSCHITL_<SETTING_NAME>_<FIELD>`` in upper case,
    e.g. ``WINDSCHITL_NUMERICS_DEFAULT_PRECISION_BITS=512``.
    Values are converted with :func:`windschitl.utils.try_convert_str`
    then coerced to the default's type when the default is a number.
    """

    @classmethod
    def env_name(cls, field_name: str) -> str:
        return f"{ENV_PREFIX}_{cls._setting_name}_{field_name}".upper()

    @classmethod
    def load(cls, environ: Opt[typing.Mapping[str, str]] = None):
        environ = os.environ if environ is None else environ
        overrides = {}
        for name in cls.fields():
            raw = environ.get(cls.env_name(name))
            if raw is None:
                continue
            value = try_convert_str(raw)
            default = getattr(cls, name, None)
            if isinstance(default, bool):
                value = bool(value)
            elif isinstance(default, float) and isinstance(value, int):
                value = float(value)
            elif isinstance(default, int) and isinstance(value, float) \
                    and value.is_integer():
                value = int(value)
            overrides[name] = value
        return cls(**overrides)


ClsType = typing.TypeVar("ClsType", bound=Setting)
def make_setting_singleton(
    cls_ins: ClsType
) -> typing.Tuple[typing.Callable[[], ClsType], typing.Callable[[ClsType], None]]:

    """使用单例模式来获取配置实例

    该函数返回两个函数：一个用于获取配置实例，一个用于设置配置实例

    Example
    ^^^^^^^

    .. code-block:: python

        get_setting, set_setting = make_setting_singleton(MySetting.load())
    """

    _setting_ins = cls_ins

    def get_setting() -> ClsType:
        return _setting_ins

    def set_setting(setting: ClsType) -> None:
        nonlocal _setting_ins
        _setting_ins = setting

    return get_setting, set_setting
