from PySide6.QtCore import Signal, QObject

from src.utils.singleton import singleton


@singleton
class SignalBus(QObject):
    # 穷举搜索每完成一层(边数)触发: n, 边数, 该层可行同构类数
    enumeration_level_done = Signal(int, int, int)
    # local search 接受一次改进时触发: 重启序号, 已评估的移动数, 新的 rho
    local_search_improved = Signal(int, int, float)
    # 无弦圈数量超过上限, 装箱结果退化为下界时触发
    packing_cap_hit = Signal(int)
