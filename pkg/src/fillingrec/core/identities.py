"""填充递推库：恒等式检验

- hlp_sum：P_μ = Σ_γ E_γ，γ 取遍 μ（补零到 n）的不同重排
- grothendieck_bottom：G_λ 的最低次齐次分量是 s_λ
- key_operator：填充侧 key 多项式与算子侧一致（经下标映射），且与约化字选择无关

每个检验返回 IdentityReport；不一致时不抛异常，由调用方决定退出码。
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Any, Dict, List, Optional, Sequence

from fillingrec.core.constants import constants
from fillingrec.core.errors import UsageError
from fillingrec.core.generators import grothendieck, hl_E, hl_P, key_polynomial, schur
from fillingrec.core.math.operators import (
    all_reduced_words,
    apply_index_map,
    inverse,
    key_via_operators,
    sorting_permutation,
)
from fillingrec.core.math.polynomial import MultivariatePolynomial

logger = logging.getLogger(__name__)


@dataclass
class IdentityReport:
    """恒等式检验结果"""
    identity: str
    passed: bool
    params: Dict[str, Any]
    cases: int = 1
    failures: List[str] = field(default_factory=list)


def hlp_sum(mu: Sequence[int], n: int, strategy: Optional[str] = None) -> IdentityReport:
    if len(mu) > n:
        raise UsageError(f"μ 的长度超过 n={n}")
    mu = tuple(mu) + (0,) * (n - len(mu))
    total = MultivariatePolynomial.zero(n)
    gammas = sorted(set(permutations(mu)))
    for gamma in gammas:
        total = total + hl_E(gamma, n, strategy)
    expected = hl_P(mu, n)
    failures = [] if total == expected else [f"Σ E_γ = {total}，P_μ = {expected}"]
    return IdentityReport('hlp_sum', not failures, {'mu': list(mu), 'n': n}, len(gammas), failures)


def grothendieck_bottom(shape: Sequence[int], n: int, strategy: Optional[str] = None) -> IdentityReport:
    size = sum(shape)
    bottom = grothendieck(shape, n, strategy).homogeneous_part(size)
    expected = schur(shape, n, strategy=strategy)
    failures = [] if bottom == expected else [f"最低次分量 {bottom} ≠ s_λ = {expected}"]
    return IdentityReport('grothendieck_bottom', not failures, {'shape': list(shape), 'n': n}, 1, failures)


def key_operator(max_size: int = 4, max_n: int = 3, strategy: Optional[str] = None) -> IdentityReport:
    """|α| <= max_size、n <= max_n 范围内的填充侧/算子侧一致性"""
    failures = []
    cases = 0
    for n in range(1, max_n + 1):
        for alpha in product(range(max_size + 1), repeat=n):
            if sum(alpha) > max_size:
                continue
            cases += 1
            filling_side = key_polynomial(alpha, n, strategy)
            mapped = apply_index_map(alpha, constants.KEY_INDEX_MAP)
            target = inverse(sorting_permutation(mapped))
            values = {key_via_operators(mapped, n, word) for word in all_reduced_words(target)}
            if len(values) != 1:
                failures.append(f"α={alpha}：不同约化字给出不同结果")
            elif filling_side not in values:
                failures.append(f"α={alpha}：填充侧 {filling_side} ≠ 算子侧 {values.pop()}")
    logger.info("key_operator: %d cases, %d failures", cases, len(failures))
    return IdentityReport('key_operator', not failures,
                          {'max_size': max_size, 'max_n': max_n}, cases, failures)


IDENTITIES = {
    'hlp_sum': hlp_sum,
    'grothendieck_bottom': grothendieck_bottom,
    'key_operator': key_operator,
}

__all__ = ['IdentityReport', 'hlp_sum', 'grothendieck_bottom', 'key_operator', 'IDENTITIES']
