import importlib.util
from pathlib import Path

import loguru


class PluginRegister:
    @staticmethod
    def load_plugins(search_path: Path, spec_class: type) -> list:
        """
        加载指定目录下的所有插件, 按文件名排序, 跳过以下划线开头的文件

        Args:
            search_path: 要搜索的目录
            spec_class: 要搜索的插件的父类(不需要实例化)

        Returns:
            插件实例列表
        """
        plugins = []

        for file in sorted(search_path.glob("*.py")):
            if file.stem.startswith("_"):
                continue
            spec = importlib.util.spec_from_file_location(f"{search_path.name}.{file.stem}", file)
            if spec is None or spec.loader is None:
                loguru.logger.warning(f"无法加载插件文件 {file}")
                continue
            module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(module)

            for obj in vars(module).values():
                if (
                    isinstance(obj, type)
                    and issubclass(obj, spec_class)
                    and obj is not spec_class
                    and obj.__module__ == module.__name__
                ):
                    plugins.append(obj())
        loguru.logger.debug(f"加载了{len(plugins)}个{spec_class.__name__}插件")
        return plugins
