import contextlib
import io
from enum import Enum

# qfluentwidgets 导入时会向 stdout 打印提示信息, stdout 只用于输出 JSON 报告
with contextlib.redirect_stdout(io.StringIO()):
    from qfluentwidgets import (
        ConfigItem,
        ConfigValidator,
        EnumSerializer,
        OptionsConfigItem,
        OptionsValidator,
        QConfig,
        RangeConfigItem,
        RangeValidator,
        qconfig,
    )

from src.core.paths import CONFIG_FILE
from src.core.settings import (
    CANONICAL_FORM_HARD_CAP,
    DEFAULT_CHORDLESS_CYCLE_CAP,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_LOCAL_SEARCH_BUDGET,
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_MEMO_CAP,
    DEFAULT_SPECTRAL_TIE_TOLERANCE,
    DEFAULT_TOLERANCE,
    DENSE_LEMMA_LIMIT,
)


class LogLevel(Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class PositiveFloatValidator(ConfigValidator):
    """正浮点数, 非法值回退到默认值"""

    def __init__(self, default: float):
        self.default = default

    def validate(self, value):
        return isinstance(value, (int, float)) and not isinstance(value, bool) and value > 0

    def correct(self, value):
        return value if self.validate(value) else self.default


class NonNegativeFloatValidator(PositiveFloatValidator):
    def validate(self, value):
        return isinstance(value, (int, float)) and not isinstance(value, bool) and value >= 0


class Config(QConfig):
    # 穷举与 local search
    enumeration_cap = RangeConfigItem(
        "Search", "穷举的最大顶点数", DEFAULT_ENUMERATION_CAP, RangeValidator(1, CANONICAL_FORM_HARD_CAP)
    )
    jobs = RangeConfigItem("Search", "并行进程数", 1, RangeValidator(1, 64))
    spectral_tie_tolerance = ConfigItem(
        "Search", "谱半径并列的相对误差", DEFAULT_SPECTRAL_TIE_TOLERANCE,
        NonNegativeFloatValidator(DEFAULT_SPECTRAL_TIE_TOLERANCE),
    )
    local_search_budget = RangeConfigItem(
        "Search", "每次重启评估的移动数", DEFAULT_LOCAL_SEARCH_BUDGET, RangeValidator(0, 10**9)
    )
    local_search_restarts = RangeConfigItem("Search", "重启次数", 1, RangeValidator(1, 10**4))

    # 圈装箱
    chordless_cycle_cap = RangeConfigItem(
        "Packing", "无弦圈数量上限", DEFAULT_CHORDLESS_CYCLE_CAP, RangeValidator(1, 10**9)
    )
    memo_cap = RangeConfigItem("Packing", "记忆表容量", DEFAULT_MEMO_CAP, RangeValidator(1, 2**31))

    # 谱半径
    tolerance = ConfigItem("Spectral", "幂迭代精度", DEFAULT_TOLERANCE, PositiveFloatValidator(DEFAULT_TOLERANCE))
    max_iterations = RangeConfigItem(
        "Spectral", "幂迭代最大次数", DEFAULT_MAX_ITERATIONS, RangeValidator(1, 10**9)
    )

    # 阈值集合
    slack = ConfigItem("Threshold", "阈值比较的余量", 0.0, NonNegativeFloatValidator(0.0))
    dense_limit = RangeConfigItem("Threshold", "显式计算的最大顶点数", DENSE_LEMMA_LIMIT, RangeValidator(1, 10**5))

    # 全局设置
    log_level = OptionsConfigItem(
        "General",
        "日志等级",
        LogLevel.INFO,
        OptionsValidator(LogLevel),
        EnumSerializer(LogLevel),
    )


cfg = Config()
cfg.file = CONFIG_FILE
if not CONFIG_FILE.exists():
    cfg.save()
qconfig.load(CONFIG_FILE, cfg)
