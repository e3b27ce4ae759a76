"""Windschitl TopLevel Exceptions

Every exception carries an ``errmsg`` dict and a stable CLI exit code.
"""

__all__ = [
    'WindschitlException',
    'ParamsInvalid',
    'DomainError',
    'ContractError',
    'RangeError',
    'PrecisionError',
    'EXIT_OK',
    'EXIT_VIOLATED',
    'EXIT_USAGE',
    'EXIT_PRECISION',
    'EXIT_INCONCLUSIVE',
]

import abc
import typing


EXIT_OK: typing.Final = 0
EXIT_VIOLATED: typing.Final = 1
EXIT_USAGE: typing.Final = 2
EXIT_PRECISION: typing.Final = 3
EXIT_INCONCLUSIVE: typing.Final = 4


class WindschitlException(Exception, abc.ABC):

    """Windschitl 异常基类

    :ivar errmsg: 错误描述
    """

    def __init__(self,
        errmsg: typing.Union[str, dict] = 'Exception occured',
        *args, **kwargs
    ):

        """创建异常实例

        :param errmsg: 错误信息；字符串会被包装为 ``{"errmsg": ...}``
        """
        if isinstance(errmsg, str):
            errmsg = {"errmsg": errmsg}

        self.errmsg: dict = errmsg

        super().__init__(errmsg, *args, **kwargs)

    def dump_to_jsonable(self) -> dict:
        """序列化为可JSON序列化的类型
        """
        return {k: str(v) for k, v in self.errmsg.items()}

    @property
    @abc.abstractmethod
    def exit_code(self) -> int:
        ...

    @property
    def name(self) -> str:
        """异常名称"""
        return self.__class__.__name__

    def dump_details_to_str(self) -> str:
        """将详细信息序列化为字符串
        """
        return '\n'.join([
            f"{k}: {v}"
            for k, v in self.errmsg.items()
        ])

    def __str__(self) -> str:
        return f"{self.name}: \n{self.dump_details_to_str()}"


class ParamsInvalid(WindschitlException, ValueError):

    """参数无效

    场景
    ------
    - unknown family / formula / check name
    - malformed grid or list
    - value out of the documented range
    """

    def __init__(self,
        msg: str = '',
        **params
    ):

        """
        :param msg: 附加描述
        :param params: 参数名和参数值
        """
        super().__init__({"errmsg": "invalid parameter(s), %s" % msg, **params})

    @property
    def exit_code(self) -> int:
        return EXIT_USAGE


class DomainError(ParamsInvalid):
    """Argument outside the domain of the evaluated function.
    """


class ContractError(ParamsInvalid):
    """Precondition of a theorem or truncation violated.
    """


class RangeError(WindschitlException, OverflowError):

    """Exponent range exceeded by an exp kernel.
    """

    def __init__(self, argument: typing.Any, limit: typing.Any):
        super().__init__({
            "errmsg": "argument exceeds exponent range",
            "argument": argument,
            "limit": limit,
        })

    @property
    def exit_code(self) -> int:
        return EXIT_PRECISION


class PrecisionError(WindschitlException, ArithmeticError):

    """Requested enclosure width is not reachable.
    """

    def __init__(self,
        msg: str,
        achievable_width: typing.Any = None,
        **details
    ):
        """
        :param achievable_width: best relative width reachable with the
            given precision and limits (when known)
        """
        self.achievable_width = achievable_width
        super().__init__({
            "errmsg": msg,
            "achievable_width": achievable_width,
            **details
        })

    @property
    def exit_code(self) -> int:
        return EXIT_PRECISION
