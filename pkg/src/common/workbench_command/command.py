import argparse
from abc import ABC, abstractmethod


# 子命令插件放在 command_implement 目录下, 由 CommandManager 自动加载


class CommandBase(ABC):
    name: str = ""  # 子命令名
    description: str = ""  # 描述, 同时作为 --help 的说明

    def __new__(cls, *args, **kwargs):
        # 单例
        if not hasattr(cls, "_instance"):
            cls._instance = super().__new__(cls)
        return cls._instance

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """向子命令的解析器添加参数"""
        raise NotImplementedError("This method must be implemented in subclass")

    @abstractmethod
    def parameters(self, args: argparse.Namespace) -> dict:
        """报告中的 parameters 字段, 包含从配置文件补全的默认值"""
        raise NotImplementedError("This method must be implemented in subclass")

    @abstractmethod
    def run(self, args: argparse.Namespace) -> dict:
        """执行子命令, 返回报告中的 results 字段"""
        raise NotImplementedError("This method must be implemented in subclass")

    def __repr__(self) -> str:
        return f"[{self.name}: {self.description}]"
