from typing import Any, Optional

from src.core.settings import (
    EXIT_INPUT_ERROR,
    EXIT_INVARIANT_VIOLATION,
    EXIT_RESOURCE_CAP,
)


class WorkbenchError(Exception):
    """所有引擎异常的基类, exit_code 由 presenter 转换为进程退出码"""
    exit_code: int = EXIT_INVARIANT_VIOLATION


class InvalidParameterError(WorkbenchError, ValueError):
    exit_code: int = EXIT_INPUT_ERROR


class Graph6ParseError(InvalidParameterError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ConvergenceError(InvalidParameterError):
    """Perron 数据未收敛时拒绝继续计算"""


class UnsupportedSizeError(WorkbenchError):
    exit_code: int = EXIT_RESOURCE_CAP


class CapExceededError(WorkbenchError):
    """资源上限被触发

    partial 保存触发上限之前已经得到的结果(例如已经枚举出的无弦圈)
    """
    exit_code: int = EXIT_RESOURCE_CAP

    def __init__(self, message: str, partial: Optional[Any] = None):
        super().__init__(message)
        self.partial = partial


class InvariantViolationError(WorkbenchError):
    exit_code: int = EXIT_INVARIANT_VIOLATION
