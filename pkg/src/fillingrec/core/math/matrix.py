"""填充递推库：多项式矩阵与精确行列式

本模块定义 PolynomialMatrix 类，提供：
- 由序列窗口构造 Toeplitz 型矩阵 M[i][j] = a_{k+i-j}
- Bareiss 无分数消去求行列式（每步精确整除）

依赖:
    - core.math.polynomial

理论依据:
    - 决策记录 001：全程精确整数运算
"""

from typing import List, Sequence

from fillingrec.core.errors import InvariantViolation, NonExactDivisionError, UsageError
from fillingrec.core.math.polynomial import MultivariatePolynomial, exact_divide


class PolynomialMatrix:
    """整系数多项式方阵

    参数
    ----------
    rows : Sequence[Sequence[MultivariatePolynomial]]
        方阵的行，所有元素同一作用域

    属性
    ----------
    size : int
        阶数
    num_vars : int
        元素作用域
    """

    def __init__(self, rows: Sequence[Sequence[MultivariatePolynomial]]):
        self.rows: List[List[MultivariatePolynomial]] = [list(r) for r in rows]
        self.size = len(self.rows)
        if any(len(r) != self.size for r in self.rows):
            raise UsageError("矩阵必须是方阵")
        self.num_vars = self.rows[0][0].num_vars if self.size else 0

    @classmethod
    def toeplitz_window(cls, window: Sequence[MultivariatePolynomial], k: int, r: int) -> 'PolynomialMatrix':
        """M[i][j] = a_{k+i-j}，i, j = 0..r-1"""
        if k - r + 1 < 0 or k + r - 1 >= len(window):
            raise UsageError(f"窗口无法构造 k={k} 处的 {r} 阶矩阵")
        return cls([[window[k + i - j] for j in range(r)] for i in range(r)])

    def determinant(self) -> MultivariatePolynomial:
        """Bareiss 消去；主元为零时向下换行"""
        n = self.size
        if n == 0:
            return MultivariatePolynomial.one(self.num_vars)
        m = [list(r) for r in self.rows]
        sign = 1
        prev = MultivariatePolynomial.one(self.num_vars)
        for col in range(n - 1):
            if m[col][col].is_zero:
                swap = next((r for r in range(col + 1, n) if not m[r][col].is_zero), None)
                if swap is None:
                    return MultivariatePolynomial.zero(self.num_vars)
                m[col], m[swap] = m[swap], m[col]
                sign = -sign
            pivot = m[col][col]
            for i in range(col + 1, n):
                for j in range(col + 1, n):
                    numerator = pivot * m[i][j] - m[i][col] * m[col][j]
                    try:
                        m[i][j] = exact_divide(numerator, prev)
                    except NonExactDivisionError as exc:
                        raise InvariantViolation("Bareiss 消去出现不整除") from exc
                m[i][col] = MultivariatePolynomial.zero(self.num_vars)
            prev = pivot
        det = m[n - 1][n - 1]
        return det if sign > 0 else -det


def determinant(rows: Sequence[Sequence[MultivariatePolynomial]]) -> MultivariatePolynomial:
    return PolynomialMatrix(rows).determinant()


__all__ = ['PolynomialMatrix', 'determinant']
