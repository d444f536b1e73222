from typing import Sequence

# 报告格式版本, 修改报告字段时需要同步修改
REPORT_SCHEMA_VERSION: str = "1.0"
# 浮点数统一输出17位有效数字
FLOAT_SIGNIFICANT_DIGITS: int = 17

# canonical_form 能处理的最大顶点数, 不受 --cap 影响
CANONICAL_FORM_HARD_CAP: int = 10
DEFAULT_ENUMERATION_CAP: int = 9
CAP_OVERRIDE_ENV: str = "SEL_CAP_OVERRIDE"

DEFAULT_CHORDLESS_CYCLE_CAP: int = 10**6
DEFAULT_MEMO_CAP: int = 2**24

DEFAULT_TOLERANCE: float = 1e-12
DEFAULT_MAX_ITERATIONS: int = 10**6
# 比这个更小的 rho 差值视为同一个分量(平局时取最小编号的分量)
COMPONENT_TIE_TOLERANCE: float = 1e-12

DEFAULT_SPECTRAL_TIE_TOLERANCE: float = 1e-9
# local search 中接受一次移动所需的最小 rho 增量
LOCAL_SEARCH_MIN_GAIN: float = 1e-10
DEFAULT_LOCAL_SEARCH_BUDGET: int = 10**4

DENSE_LEMMA_LIMIT: int = 10**4
# split_threshold_structure 支持的最大 n
ANALYTIC_N_LIMIT: int = 10**12
# ClassGraph 展开成显式 Graph 的上限
EXPAND_LIMIT: int = 10**4

EXIT_OK: int = 0
EXIT_INPUT_ERROR: int = 2
EXIT_RESOURCE_CAP: int = 3
EXIT_INVARIANT_VIOLATION: int = 4

OBJECTIVES: Sequence[str] = ("edges", "spectral-radius")
MODES: Sequence[str] = ("exhaustive", "local-search")
