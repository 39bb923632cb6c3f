"""tempord - 时序图边类排序的可达性最优化（精确求解 / 近似 / 困难实例构造）"""

__version__ = "1.0.0"
