"""填充递推库：异常体系

所有库内异常都派生自 FillingError，并携带 CLI 退出码。
同时继承最接近的内置异常，调用方按 ValueError / ArithmeticError 捕获依然有效。

退出码:
    0 通过，1 检查未通过，2 用法错误，3 窗口过短，4 内部不一致
"""


class FillingError(Exception):
    """库内所有异常的基类"""

    exit_code: int = 4


class UsageError(FillingError, ValueError):
    """调用参数不满足前置条件"""

    exit_code = 2


class ScopeError(UsageError):
    """两个多项式的变量个数不一致"""


class ShapeError(UsageError):
    """形状、基底或组合不合法"""


class SingularSubstitutionError(UsageError):
    """代入在负指数变量处取了不可逆的值"""


class NotSortableError(UsageError):
    """输入不满足列排序引理的前置条件"""


class UnsupportedProductError(UsageError):
    """该族没有线性统计量或不满足列闭合，无法给出乘积型特征多项式"""


class WindowTooShortError(UsageError):
    """序列窗口长度不足以完成检验"""

    exit_code = 3


class NonExactDivisionError(FillingError, ArithmeticError):
    """多项式除法不整除"""

    exit_code = 4


class InvariantViolation(FillingError, ArithmeticError):
    """内部不变量被破坏（例如差商不整除）"""

    exit_code = 4


class InconsistencyError(FillingError, ArithmeticError):
    """两条独立计算路径结果不一致"""

    exit_code = 4


__all__ = [
    'FillingError', 'UsageError', 'ScopeError', 'ShapeError',
    'SingularSubstitutionError', 'NotSortableError', 'UnsupportedProductError',
    'WindowTooShortError', 'NonExactDivisionError', 'InvariantViolation',
    'InconsistencyError',
]
