"""杨表族：半标准杨表、旗标杨表、King 辛表

三者共享"行弱递增、列严格递增"，区别只在每行可取的元素范围与权重：
- SSYT：1..n
- 旗标：a_i..b_i
- 辛表：字母 1 < 1̄ < 2 < 2̄ < ... 编码为 i -> 2i-1、ī -> 2i，第 i 行元素不小于 2i-1，
  权重 x^{w - w̄}（Laurent）
"""

from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

from fillingrec.core.errors import ShapeError
from fillingrec.core.families.base import Column, FamilyBase
from fillingrec.core.math.polynomial import MultivariatePolynomial
from fillingrec.models.enums import FillingFamily
from fillingrec.models.fillings import AugmentedFilling, weight


class SSYTFamily(FamilyBase):
    """半标准杨表"""

    tag = FillingFamily.SSYT

    def column_ok(self, column: Column) -> bool:
        values = [column[i] for i in sorted(column)]
        return all(values[r] < values[r + 1] for r in range(len(values) - 1))

    def pair_ok(self, left: Column, right: Column, row_lengths: Mapping[int, int]) -> bool:
        return all(left[i] <= v for i, v in right.items() if i in left)

    def filling_weight(self, filling: AugmentedFilling) -> MultivariatePolynomial:
        return self.monomial(weight(filling, self.num_vars))


class FlaggedFamily(SSYTFamily):
    """旗标半标准杨表：第 i 行元素落在 [a_i, b_i]"""

    tag = FillingFamily.FLAGGED

    def __init__(self, alphabet: int, flags_a: Sequence[int], flags_b: Sequence[int],
                 num_vars: Optional[int] = None, config: Optional[Dict[str, Any]] = None):
        super().__init__(alphabet, num_vars, config)
        self.flags_a = tuple(flags_a)
        self.flags_b = tuple(flags_b)
        if len(self.flags_a) != len(self.flags_b):
            raise ShapeError("旗标 a 与 b 的长度必须一致")
        for seq in (self.flags_a, self.flags_b):
            if any(seq[i] > seq[i + 1] for i in range(len(seq) - 1)):
                raise ShapeError(f"旗标必须弱递增：{seq}")
        if any(a > b or a < 1 or b > alphabet for a, b in zip(self.flags_a, self.flags_b)):
            raise ShapeError(f"旗标区间不合法：a={self.flags_a}, b={self.flags_b}")

    def candidates(self, row: int) -> Sequence[int]:
        if row > len(self.flags_a):
            raise ShapeError(f"第 {row} 行没有旗标")
        return range(self.flags_a[row - 1], self.flags_b[row - 1] + 1)


class SymplecticFamily(SSYTFamily):
    """King 辛表；alphabet 为编码后的上界 2n"""

    tag = FillingFamily.SYMPLECTIC

    def __init__(self, n: int, config: Optional[Dict[str, Any]] = None):
        super().__init__(2 * n, n, config)

    def candidates(self, row: int) -> Sequence[int]:
        return range(2 * row - 1, self.alphabet + 1)

    def column_exponents(self, column: Column) -> Tuple[int, ...]:
        exps = [0] * self.num_vars
        for value in column.values():
            exps[(value + 1) // 2 - 1] += 1 if value % 2 else -1
        return tuple(exps)

    def filling_weight(self, filling: AugmentedFilling) -> MultivariatePolynomial:
        encoded = weight(filling, self.alphabet)
        exps = [encoded[2 * i] - encoded[2 * i + 1] for i in range(self.num_vars)]
        return self.monomial(exps)


__all__ = ['SSYTFamily', 'FlaggedFamily', 'SymplecticFamily']
