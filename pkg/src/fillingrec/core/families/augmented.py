"""增广填充族：半标准增广填充（SSAF）与非攻击弱递减填充（NAWF）

两者都以第 0 列为基底，要求行弱递减（含基底）且任意两格互不攻击。
SSAF 另外禁止满足 T(a) >= T(c) >= T(b) 的三元组；
NAWF 不禁止，但把这类三元组计入 t 的指数。

依赖:
    - core.families.base.FamilyBase
    - models.fillings（整张填充的统计量，供 oracle 使用）
"""

from typing import Iterator, Mapping, Tuple

from fillingrec.core.families.base import Column, FamilyBase
from fillingrec.core.math.polynomial import MultivariatePolynomial
from fillingrec.models.enums import FillingFamily
from fillingrec.models.fillings import AugmentedFilling, coinv, dn, weight


def triple_values(left: Column, right: Column,
                  row_lengths: Mapping[int, int]) -> Iterator[Tuple[int, int, int]]:
    """相邻两列中所有三元组位置的 (T(a), T(b), T(c))"""
    for i, b in right.items():
        a = left.get(i)
        if a is None:
            continue
        length = row_lengths.get(i, 0)
        for i2, c in right.items():
            if i2 > i and length >= row_lengths.get(i2, 0):
                yield a, b, c
        for i2, c in left.items():
            if i2 < i and length > row_lengths.get(i2, 0):
                yield a, b, c


class _AugmentedFamily(FamilyBase):
    """行弱递减 + 非攻击"""

    def column_ok(self, column: Column) -> bool:
        values = list(column.values())
        return len(set(values)) == len(values)

    def _rows_and_attacks_ok(self, left: Column, right: Column) -> bool:
        for i, v in right.items():
            head = left.get(i)
            if head is None or v > head:
                return False
            for i2, u in left.items():
                if i2 < i and u == v:
                    return False
        return True


class SSAFFamily(_AugmentedFamily):
    """半标准增广填充：Demazure 原子与 key 多项式的组合模型"""

    tag = FillingFamily.SSAF

    def pair_ok(self, left: Column, right: Column, row_lengths: Mapping[int, int]) -> bool:
        if not self._rows_and_attacks_ok(left, right):
            return False
        return not any(a >= c >= b for a, b, c in triple_values(left, right, row_lengths))

    def filling_weight(self, filling: AugmentedFilling) -> MultivariatePolynomial:
        return self.monomial(weight(filling, self.num_vars))


class NAWFFamily(_AugmentedFamily):
    """非攻击弱递减填充：权重 x^w t^coinv (1-t)^dn"""

    tag = FillingFamily.NAWF
    linear_statistic = False

    def pair_ok(self, left: Column, right: Column, row_lengths: Mapping[int, int]) -> bool:
        return self._rows_and_attacks_ok(left, right)

    def pair_weight(self, left: Column, right: Column, row_lengths: Mapping[int, int],
                    left_is_basement: bool = False) -> MultivariatePolynomial:
        inversions = sum(1 for a, b, c in triple_values(left, right, row_lengths) if a >= c >= b)
        descents = 0
        if not left_is_basement or self.settings.dn_includes_basement:
            descents = sum(1 for i, v in right.items() if left.get(i) is not None and left[i] != v)
        one = MultivariatePolynomial.one(self.num_vars)
        t = MultivariatePolynomial.t(self.num_vars)
        return t ** inversions * (one - t) ** descents

    def filling_weight(self, filling: AugmentedFilling) -> MultivariatePolynomial:
        one = MultivariatePolynomial.one(self.num_vars)
        t = MultivariatePolynomial.t(self.num_vars)
        x_part = self.monomial(weight(filling, self.num_vars))
        return x_part * t ** coinv(filling) * (one - t) ** dn(filling, self.settings.dn_includes_basement)


__all__ = ['SSAFFamily', 'NAWFFamily', 'triple_values']
