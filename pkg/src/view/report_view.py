"""
JSON 报告的输出

字段顺序固定, 浮点数统一为 17 位有效数字, 相同的命令与参数得到逐字节相同的报告(wall_time 除外)
"""
import json
import math
import sys
from dataclasses import dataclass
from typing import Any, TextIO

import numpy as np

from src.core.settings import FLOAT_SIGNIFICANT_DIGITS, REPORT_SCHEMA_VERSION
from src.core.version import __version__


@dataclass(frozen=True)
class Report:
    command: str
    parameters: dict
    results: dict
    wall_time: float
    partial: bool = False
    tool_version: str = __version__
    schema_version: str = REPORT_SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "partial": self.partial,
            "tool_version": self.tool_version,
            "wall_time": self.wall_time,
        }


class ReportView:
    def __init__(self, stream: TextIO | None = None):
        self._stream = stream

    @property
    def stream(self) -> TextIO:
        return self._stream if self._stream is not None else sys.stdout

    @staticmethod
    def format_float(value: float) -> str:
        if math.isnan(value) or math.isinf(value):
            return "null"
        return f"{value:.{FLOAT_SIGNIFICANT_DIGITS}g}"

    def encode(self, value: Any, indent: int = 0) -> str:
        """按插入顺序输出, 每层缩进 2 个空格"""
        pad = "  " * (indent + 1)
        closing = "  " * indent
        if isinstance(value, (bool, np.bool_)):
            return "true" if value else "false"
        if value is None:
            return "null"
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        if isinstance(value, (float, np.floating)):
            return self.format_float(float(value))
        if isinstance(value, str):
            return json.dumps(value, ensure_ascii=False)
        if isinstance(value, dict):
            if not value:
                return "{}"
            items = [f"{pad}{json.dumps(str(key), ensure_ascii=False)}: {self.encode(item, indent + 1)}"
                     for key, item in value.items()]
            return "{\n" + ",\n".join(items) + f"\n{closing}}}"
        if isinstance(value, (list, tuple, np.ndarray)):
            if len(value) == 0:
                return "[]"
            if all(isinstance(item, (bool, int, float, np.number)) or item is None for item in value):
                return "[" + ", ".join(self.encode(item, indent + 1) for item in value) + "]"
            items = [f"{pad}{self.encode(item, indent + 1)}" for item in value]
            return "[\n" + ",\n".join(items) + f"\n{closing}]"
        raise TypeError(f"cannot serialize {type(value).__name__} in a report")

    def render(self, report: Report) -> str:
        return self.encode(report.to_dict()) + "\n"

    def show(self, report: Report) -> None:
        self.stream.write(self.render(report))
        self.stream.flush()
