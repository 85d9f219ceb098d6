"""填充递推库：多项式族的生成器

每个生成器把参数翻译成（填充族, 图, 基底）三元组，再交给 core.enumeration；
hl_P 例外，由对称化公式直接计算。伸缩窗口复用同一个 TransferGraph。

依赖:
    - core.enumeration
    - core.families
    - models.shapes
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from fillingrec.core.enumeration import TransferGraph, oracle_generating_function
from fillingrec.core.errors import ShapeError, UsageError
from fillingrec.core.families import (
    FamilyBase,
    FlaggedFamily,
    NAWFFamily,
    RPPFamily,
    SetValuedFamily,
    SSAFFamily,
    SSYTFamily,
    SymplecticFamily,
)
from fillingrec.core.math.polynomial import (
    MultivariatePolynomial,
    exact_divide,
    permute_vars,
    t_factorial,
    vandermonde,
)
from fillingrec.core.settings import get_settings
from fillingrec.models.shapes import (
    Diagram,
    as_composition,
    diagram_from_composition,
    dilate,
    is_partition,
    shape_data,
    skew_diagram,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FillingProblem:
    """一个可枚举的生成函数：族、基础图与基底"""

    family: FamilyBase
    diagram: Diagram
    basement: Optional[Tuple[int, ...]] = None

    def generating_function(self, strategy: Optional[str] = None, k: int = 1) -> MultivariatePolynomial:
        strategy = strategy or self.family.settings.strategy
        if strategy == 'oracle':
            return oracle_generating_function(self.family, dilate(self.diagram, k), self.basement)
        if strategy == 'transfer':
            return TransferGraph(self.family, self.diagram, self.basement).generating_function(k)
        raise UsageError(f"未知枚举策略：{strategy}")


def _partition(shape: Sequence[int], name: str = "λ") -> Tuple[int, ...]:
    shape = as_composition(shape)
    if not is_partition(shape):
        raise ShapeError(f"{name} 必须是分拆：{shape}")
    return shape


def _check_rows(shape: Sequence[int], n: int):
    if sum(1 for p in shape if p > 0) > n:
        raise ShapeError(f"形状 {tuple(shape)} 的非零行数超过 n={n}")


# ====================================================
# 问题构造
# ====================================================

def schur_problem(shape, n, inner=None) -> FillingProblem:
    outer = _partition(shape)
    inner_part = _partition(inner or (), "μ")
    diagram = skew_diagram(outer, inner_part)
    return FillingProblem(SSYTFamily(n, n), diagram)


def flagged_schur_problem(shape, flags_a, flags_b, n, inner=None) -> FillingProblem:
    outer = _partition(shape)
    diagram = skew_diagram(outer, _partition(inner or (), "μ"))
    if len(flags_a) < diagram.num_rows or len(flags_b) < diagram.num_rows:
        raise ShapeError("旗标长度不足以覆盖所有行")
    return FillingProblem(FlaggedFamily(n, flags_a, flags_b, n), diagram)


def atom_problem(basement, alpha, n) -> FillingProblem:
    basement = tuple(basement)
    alpha = as_composition(alpha)
    if len(alpha) != len(basement):
        raise ShapeError(f"基底长度 {len(basement)} 与组合长度 {len(alpha)} 不符")
    if len(set(basement)) != len(basement) or any(b < 1 for b in basement):
        raise ShapeError(f"基底必须是两两不同的正整数：{basement}")
    if basement and max(basement) > n:
        raise UsageError(f"基底最大值 {max(basement)} 超过变量个数 n={n}")
    return FillingProblem(SSAFFamily(n, n), diagram_from_composition(alpha), basement)


def key_problem(alpha, n=None) -> FillingProblem:
    alpha = as_composition(alpha)
    n = len(alpha) if n is None else n
    data = shape_data(alpha, n)
    return FillingProblem(SSAFFamily(n, n), data.diagram, data.basement)


def hl_E_problem(alpha, n=None) -> FillingProblem:
    alpha = as_composition(alpha)
    n = len(alpha) if n is None else n
    if len(alpha) > n:
        raise ShapeError(f"组合长度 {len(alpha)} 超过 n={n}")
    alpha = alpha + (0,) * (n - len(alpha))
    return FillingProblem(NAWFFamily(n, n), diagram_from_composition(alpha), tuple(range(1, n + 1)))


def symplectic_problem(shape, n) -> FillingProblem:
    shape = _partition(shape)
    _check_rows(shape, n)
    return FillingProblem(SymplecticFamily(n), diagram_from_composition(shape))


def grothendieck_problem(shape, n) -> FillingProblem:
    shape = _partition(shape)
    return FillingProblem(SetValuedFamily(n, n), diagram_from_composition(shape))


def dual_grothendieck_problem(shape, n) -> FillingProblem:
    shape = _partition(shape)
    return FillingProblem(RPPFamily(n, n), diagram_from_composition(shape))


# ====================================================
# 多项式
# ====================================================

def schur(shape, n, inner=None, strategy=None) -> MultivariatePolynomial:
    """s_{λ/μ}(x_1..x_n)"""
    return schur_problem(shape, n, inner).generating_function(strategy)


def flagged_schur(shape, flags_a, flags_b, n, inner=None, strategy=None) -> MultivariatePolynomial:
    """第 i 行元素落在 [a_i, b_i] 的旗标 Schur 多项式"""
    return flagged_schur_problem(shape, flags_a, flags_b, n, inner).generating_function(strategy)


def demazure_atom(basement, alpha, n, strategy=None) -> MultivariatePolynomial:
    """基底 β、形状 α 的广义 Demazure 原子"""
    return atom_problem(basement, alpha, n).generating_function(strategy)


def key_polynomial(alpha, n=None, strategy=None) -> MultivariatePolynomial:
    """K_α = 基底 β(α)、形状 λ(α) 的 SSAF 生成函数"""
    return key_problem(alpha, n).generating_function(strategy)


def hl_E(alpha, n=None, strategy=None) -> MultivariatePolynomial:
    """非对称 Hall-Littlewood 多项式 E_α(x; t)，基底 β_i = i"""
    return hl_E_problem(alpha, n).generating_function(strategy)


def symplectic_schur(shape, n, strategy=None) -> MultivariatePolynomial:
    """sp_λ(x_1^{±1}..x_n^{±1})"""
    return symplectic_problem(shape, n).generating_function(strategy)


def grothendieck(shape, n, strategy=None) -> MultivariatePolynomial:
    """对称 Grothendieck 多项式 G_λ"""
    return grothendieck_problem(shape, n).generating_function(strategy)


def dual_grothendieck(shape, n, strategy=None) -> MultivariatePolynomial:
    """对偶对称 Grothendieck 多项式 g_λ"""
    return dual_grothendieck_problem(shape, n).generating_function(strategy)


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def hl_P(mu, n) -> MultivariatePolynomial:
    """Hall-Littlewood P_μ(x; t)

    Σ_σ sgn(σ)·σ(x^μ Π_{i<j}(x_i - t x_j)) 先精确除以 Vandermonde，
    再精确除以 Π_i [m_i]_t!（m_i 为 μ 中 i 的重数，含 0）。
    """
    mu = _partition(mu, "μ")
    if len(mu) > n:
        if any(mu[n:]):
            raise ShapeError(f"μ={mu} 的非零行数超过 n={n}")
        mu = mu[:n]
    mu = mu + (0,) * (n - len(mu))
    t = MultivariatePolynomial.t(n)
    x = [MultivariatePolynomial.x(i, n) for i in range(1, n + 1)]
    base = MultivariatePolynomial.monomial(mu, num_vars=n)
    for i in range(n):
        for j in range(i + 1, n):
            base = base * (x[i] - t * x[j])
    numerator = MultivariatePolynomial.zero(n)
    for perm in permutations(range(1, n + 1)):
        numerator = numerator + _sign(perm) * permute_vars(base, perm)
    quotient = exact_divide(numerator, vandermonde(n))
    multiplicities: Dict[int, int] = {}
    for part in mu:
        multiplicities[part] = multiplicities.get(part, 0) + 1
    denominator = MultivariatePolynomial.one(n)
    for m in multiplicities.values():
        denominator = denominator * t_factorial(m, n)
    return exact_divide(quotient, denominator)


# ====================================================
# 伸缩窗口
# ====================================================

def dilation_window(problem: FillingProblem, kmax: int, start: int = 0,
                    strategy: Optional[str] = None) -> List[MultivariatePolynomial]:
    """[F(kD)]_{k=start..kmax}；transfer 路径共用一张列转移图"""
    strategy = strategy or problem.family.settings.strategy
    ks = list(range(start, kmax + 1))
    if strategy == 'oracle':
        return [problem.generating_function('oracle', k) for k in ks]
    graph = TransferGraph(problem.family, problem.diagram, problem.basement)
    threads = get_settings().threads
    if threads > 1 and len(ks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(graph.generating_function, ks))
    return [graph.generating_function(k) for k in ks]


def key_window(alpha, n, kmax, start=0, strategy=None) -> List[MultivariatePolynomial]:
    return dilation_window(key_problem(alpha, n), kmax, start, strategy)


def hl_P_window(mu, n, kmax, start=0) -> List[MultivariatePolynomial]:
    return [hl_P(tuple(k * p for p in mu), n) for k in range(start, kmax + 1)]


__all__ = [
    'FillingProblem',
    'schur_problem', 'flagged_schur_problem', 'atom_problem', 'key_problem',
    'hl_E_problem', 'symplectic_problem', 'grothendieck_problem', 'dual_grothendieck_problem',
    'schur', 'flagged_schur', 'demazure_atom', 'key_polynomial', 'hl_E', 'hl_P',
    'symplectic_schur', 'grothendieck', 'dual_grothendieck',
    'dilation_window', 'key_window', 'hl_P_window',
]
