"""填充递推库常数体系：冻结的数学约定

此文件集中定义所有不随运行配置变化的约定，包括：
- 填充侧与算子侧 key 多项式的下标映射
- dn 统计是否计入基底列
- 各族递推检验的起始下标
- CLI 退出码
- golden 语料请求清单

状态：冻结，变更需同步更新 docs/decisions 中对应记录
"""

from typing import Dict, List, Tuple
from dataclasses import dataclass, field


@dataclass
class FillingConstants:
    """冻结的数学约定"""

    # ====================================================
    # 1. 约定
    # ====================================================

    KEY_INDEX_MAP: str = "reverse"
    """key_polynomial(α) = key_via_operators(τ(α))，τ 为反转"""

    INDEX_MAP_CANDIDATES: Tuple[str, ...] = ("identity", "reverse")

    DN_INCLUDES_BASEMENT: bool = True
    """dn 统计计入 (基底, 第一列) 这一对"""

    # ====================================================
    # 2. 递推检验
    # ====================================================
    # 起始下标 0 表示 k=0 处取值 1 仍满足递推（有特征标公式支撑）；
    # 其余族只在 k>=1 上检验。

    RECURRENCE_START: Dict[str, int] = field(default_factory=lambda: {
        'key': 0,
        'schur': 0,
        'symplectic_schur': 0,
        'demazure_atom': 1,
        'flagged_schur': 1,
        'hl_E': 1,
        'hl_P': 1,
        'grothendieck': 1,
        'dual_grothendieck': 1,
    })

    MAX_DETECT_ORDER: int = 6

    # ====================================================
    # 3. 退出码
    # ====================================================

    EXIT_CODES: Dict[str, int] = field(default_factory=lambda: {
        'pass': 0,
        'fail': 1,
        'usage': 2,
        'window': 3,
        'inconsistency': 4,
    })

    # ====================================================
    # 4. golden 语料（oracle 写出，transfer 路径比对）
    # ====================================================

    GOLDEN_CORPUS: List[Dict] = field(default_factory=lambda: [
        {'name': 'schur_21_n3', 'family': 'schur', 'shape': [2, 1], 'n': 3},
        {'name': 'schur_skew_22_1_n3', 'family': 'schur', 'shape': [2, 2], 'inner': [1], 'n': 3},
        {'name': 'key_0201', 'family': 'key', 'alpha': [0, 2, 0, 1], 'n': 4},
        {'name': 'key_102', 'family': 'key', 'alpha': [1, 0, 2], 'n': 3},
        {'name': 'atom_132_012', 'family': 'demazure_atom', 'basement': [1, 3, 2], 'alpha': [0, 1, 2], 'n': 3},
        {'name': 'hlE_021', 'family': 'hl_E', 'alpha': [0, 2, 1], 'n': 3},
        {'name': 'flagged_21', 'family': 'flagged_schur', 'shape': [2, 1],
         'flags_a': [1, 2], 'flags_b': [2, 3], 'n': 3},
        {'name': 'symplectic_11_n2', 'family': 'symplectic_schur', 'shape': [1, 1], 'n': 2},
        {'name': 'groth_21_n2', 'family': 'grothendieck', 'shape': [2, 1], 'n': 2},
        {'name': 'dualgroth_21_n2', 'family': 'dual_grothendieck', 'shape': [2, 1], 'n': 2},
    ])

    def recurrence_start(self, family: str) -> int:
        """某族递推检验的起始下标"""
        return self.RECURRENCE_START.get(family, 1)


# 全局常数实例（冻结约定，运行期不修改）
constants = FillingConstants()

__all__ = ['FillingConstants', 'constants']
