"""填充递推库：填充族基类

族由列内约束与相邻列约束两类局部条件决定，权重按列与列对拆分。

依赖:
    - core.settings
    - core.math.polynomial
    - models.fillings
"""

from typing import Any, Dict, Mapping, Optional, Sequence, Tuple
from abc import ABC, abstractmethod

from fillingrec.core.errors import UsageError
from fillingrec.core.math.polynomial import MultivariatePolynomial
from fillingrec.core.settings import get_settings
from fillingrec.models.enums import EntryKind, FillingFamily
from fillingrec.models.fillings import AugmentedFilling, Entry

Column = Mapping[int, Entry]


class FamilyBase(ABC):
    """所有填充族的抽象基类

    一个族完全由两类局部约束刻画：列内约束 column_ok 与相邻列约束 pair_ok。
    两者都只检查已经出现的格子，因此对逐格回溯中的半成品列同样成立。
    生成函数的权重拆成列权重与相邻列对权重之积，供列转移图使用；
    filling_weight 则由整张填充的统计量直接计算，供回溯 oracle 使用。

    Args:
        alphabet: 元素上界
        num_vars: 多项式的 x 变量个数，缺省等于 alphabet
        config: 运行配置覆盖项
    """

    tag: FillingFamily
    linear_statistic: bool = True   # 权重是否为各列权重之积
    column_closed: bool = True      # 可复制、可删除同形相邻列

    def __init__(self, alphabet: int, num_vars: Optional[int] = None,
                 config: Optional[Dict[str, Any]] = None):
        if alphabet < 0:
            raise UsageError(f"字母表上界必须非负：{alphabet}")
        self.alphabet = alphabet
        self.num_vars = alphabet if num_vars is None else num_vars
        self.settings = get_settings(config)
        self.name = self.__class__.__name__

    # ---------- 约束 ----------
    def candidates(self, row: int) -> Sequence[Entry]:
        """第 row 行格子可取的元素，升序"""
        return range(1, self.alphabet + 1)

    @abstractmethod
    def column_ok(self, column: Column) -> bool:
        """列内约束"""

    @abstractmethod
    def pair_ok(self, left: Column, right: Column, row_lengths: Mapping[int, int]) -> bool:
        """相邻两列（left 在左）之间的约束"""

    # ---------- 权重 ----------
    def monomial(self, exps: Sequence[int], t_exp: int = 0, coeff: int = 1) -> MultivariatePolynomial:
        return MultivariatePolynomial.monomial(tuple(exps), t_exp, coeff, num_vars=self.num_vars)

    def column_exponents(self, column: Column) -> Tuple[int, ...]:
        exps = [0] * self.num_vars
        for value in column.values():
            exps[value - 1] += 1
        return tuple(exps)

    def column_weight(self, column: Column) -> MultivariatePolynomial:
        return self.monomial(self.column_exponents(column))

    def pair_weight(self, left: Column, right: Column, row_lengths: Mapping[int, int],
                    left_is_basement: bool = False) -> MultivariatePolynomial:
        return MultivariatePolynomial.one(self.num_vars)

    @abstractmethod
    def filling_weight(self, filling: AugmentedFilling) -> MultivariatePolynomial:
        """由整张填充的统计量算出的单项式"""

    # ---------- 成员判定 ----------
    def is_member(self, filling: AugmentedFilling) -> bool:
        if self.tag.augmented and filling.basement is None:
            return False
        for _, value in filling.cells:
            if (self.tag.entry_kind is EntryKind.SET) != isinstance(value, tuple):
                return False
        for (i, _), value in filling.cells:
            if value not in self.candidates(i):
                return False
        lengths = filling.diagram.row_lengths()
        for j in range(1, filling.num_columns + 1):
            column = filling.column(j)
            if not self.column_ok(column):
                return False
            if not self.pair_ok(filling.column(j - 1), column, lengths):
                return False
        return True

    def get_state(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "family": self.tag.tag,
            "alphabet": self.alphabet,
            "num_vars": self.num_vars,
        }

    def __repr__(self) -> str:
        return f"<{self.name}(alphabet={self.alphabet}, n={self.num_vars})>"
