import sys
import time
from typing import Optional, Sequence

import loguru

from src.common.exceptions import CapExceededError, WorkbenchError
from src.config import cfg
from src.core.settings import EXIT_INPUT_ERROR, EXIT_OK
from src.model.main_model import MainModel
from src.signal_bus import SignalBus
from src.utils.singleton import singleton
from src.view.report_view import Report, ReportView


@singleton
class MainPresenter:
    def __init__(self, view: Optional[ReportView] = None):
        self._signal_bus = SignalBus()
        self._model = MainModel()
        self._view = view if view is not None else ReportView()
        self._stderr_sink: Optional[int] = None
        self._bind()

    # ==========================
    # 基础属性
    # ==========================

    @property
    def view(self) -> ReportView:
        return self._view

    @view.setter
    def view(self, view: ReportView) -> None:
        self._view = view

    @property
    def model(self) -> MainModel:
        return self._model

    # ==========================
    # 日志与进度
    # ==========================

    def _bind(self) -> None:
        self._signal_bus.enumeration_level_done.connect(
            lambda n, edges, count: loguru.logger.info(f"n={n}: {edges} 条边的可行类 {count} 个")
        )
        self._signal_bus.local_search_improved.connect(
            lambda restart, evaluated, rho: loguru.logger.info(
                f"第 {restart} 次重启, 评估 {evaluated} 次后 rho 提升到 {rho:.12f}"
            )
        )
        self._signal_bus.packing_cap_hit.connect(
            lambda lower: loguru.logger.warning(f"无弦圈超过上限, nu >= {lower} 只是下界")
        )

    def _configure_stderr(self, level: str) -> None:
        if self._stderr_sink is not None:
            loguru.logger.remove(self._stderr_sink)
        self._stderr_sink = loguru.logger.add(sys.stderr, level=level)

    # ==========================
    # 执行
    # ==========================

    def run(self, argv: Sequence[str]) -> int:
        """解析参数并执行子命令, 返回进程退出码"""
        parser = self._model.command_manager.build_parser(cfg.get(cfg.log_level).value)
        try:
            args = parser.parse_args(list(argv))
        except SystemExit as e:
            # argparse 出错时退出码为 2, --help / --version 为 0
            return EXIT_OK if not e.code else EXIT_INPUT_ERROR
        self._configure_stderr(args.log_level)
        loguru.logger.debug(f"执行命令 {args.command}: {vars(args)}")

        start = time.perf_counter()
        parameters: dict = {}
        try:
            command = self._model.get_command(args)
            parameters = command.parameters(args)
            results = command.run(args)
        except CapExceededError as e:
            loguru.logger.error(str(e))
            if isinstance(e.partial, dict):
                report = Report(args.command, parameters, e.partial, time.perf_counter() - start, partial=True)
                self._view.show(report)
            return e.exit_code
        except WorkbenchError as e:
            loguru.logger.error(f"{type(e).__name__}: {e}")
            return e.exit_code
        self._view.show(Report(args.command, parameters, results, time.perf_counter() - start))
        return EXIT_OK
