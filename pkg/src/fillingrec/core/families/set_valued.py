"""K 理论族：集合值杨表（Grothendieck）与反向平面分拆（对偶 Grothendieck）"""

from itertools import combinations
from typing import List, Mapping, Tuple

from fillingrec.core.families.base import Column, FamilyBase
from fillingrec.core.math.polynomial import MultivariatePolynomial
from fillingrec.models.enums import FillingFamily
from fillingrec.models.fillings import AugmentedFilling, ev, weight


class SetValuedFamily(FamilyBase):
    """集合值杨表：行弱递增（max A <= min B），列严格（max A < min B）

    权重 (-1)^{|T|-|λ|} x^w；同一非单元素集合不能横向复制，因此不列闭合。
    """

    tag = FillingFamily.SET_VALUED
    linear_statistic = False
    column_closed = False

    def __init__(self, alphabet, num_vars=None, config=None):
        super().__init__(alphabet, num_vars, config)
        self._subsets: List[Tuple[int, ...]] = sorted(
            s for size in range(1, alphabet + 1)
            for s in combinations(range(1, alphabet + 1), size))

    def candidates(self, row: int):
        return self._subsets

    def column_ok(self, column: Column) -> bool:
        sets = [column[i] for i in sorted(column)]
        return all(max(sets[r]) < min(sets[r + 1]) for r in range(len(sets) - 1))

    def pair_ok(self, left: Column, right: Column, row_lengths: Mapping[int, int]) -> bool:
        return all(max(left[i]) <= min(s) for i, s in right.items() if i in left)

    def column_weight(self, column: Column) -> MultivariatePolynomial:
        exps = [0] * self.num_vars
        extra = 0
        for entry in column.values():
            extra += len(entry) - 1
            for i in entry:
                exps[i - 1] += 1
        return self.monomial(exps, coeff=(-1) ** extra)

    def filling_weight(self, filling: AugmentedFilling) -> MultivariatePolynomial:
        size = sum(len(entry) for _, entry in filling.cells)
        sign = (-1) ** (size - len(filling.cells))
        return self.monomial(weight(filling, self.num_vars), coeff=sign)


class RPPFamily(FamilyBase):
    """反向平面分拆：行、列均弱递减；权重 x^{ev}"""

    tag = FillingFamily.RPP

    def column_ok(self, column: Column) -> bool:
        values = [column[i] for i in sorted(column)]
        return all(values[r] >= values[r + 1] for r in range(len(values) - 1))

    def pair_ok(self, left: Column, right: Column, row_lengths: Mapping[int, int]) -> bool:
        return all(left[i] >= v for i, v in right.items() if i in left)

    def column_exponents(self, column: Column) -> Tuple[int, ...]:
        exps = [0] * self.num_vars
        for value in set(column.values()):
            exps[value - 1] += 1
        return tuple(exps)

    def filling_weight(self, filling: AugmentedFilling) -> MultivariatePolynomial:
        return self.monomial(ev(filling, self.num_vars))


__all__ = ['SetValuedFamily', 'RPPFamily']
