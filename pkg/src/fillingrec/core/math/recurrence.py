"""填充递推库：C-有限序列与特征多项式

本模块提供：
- CharPoly：以 (根, 重数) 给出的特征多项式 Π (t - ρ)^m
- 零化检验、行列式检验与最小阶检测
- 和、积、抽取三种闭包运算的特征多项式
- 显式通项窗口与列块序列（用于验证闭包运算与列块引理）
- 由折叠列填充给出的乘积型特征多项式（一般族与 key 多项式）
- 在 x_i = 1 处特殊化后的精确插值

依赖:
    - core.math.polynomial
    - core.math.matrix.PolynomialMatrix
    - core.enumeration.TransferGraph（折叠列根）

理论依据:
    - 决策记录 001：全程精确整数运算
    - 决策记录 003：行列式阶与递推阶
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from fillingrec.core.errors import (
    InconsistencyError,
    ScopeError,
    UnsupportedProductError,
    UsageError,
    WindowTooShortError,
)
from fillingrec.core.math.matrix import PolynomialMatrix
from fillingrec.core.math.polynomial import MultivariatePolynomial, substitute

logger = logging.getLogger(__name__)

Window = Sequence[MultivariatePolynomial]
RootSpec = Union[MultivariatePolynomial, Tuple[MultivariatePolynomial, int]]


def _root_order(root: MultivariatePolynomial):
    return root.items()


@dataclass(frozen=True)
class CharPoly:
    """特征多项式 Π (t - ρ_i)^{m_i}

    属性
    ----------
    roots : Tuple[Tuple[MultivariatePolynomial, int], ...]
        (根, 重数)，根两两不同，按规范序排列
    num_vars : int
        根的作用域
    """

    roots: Tuple[Tuple[MultivariatePolynomial, int], ...]
    num_vars: int

    @classmethod
    def from_roots(cls, roots: Iterable[RootSpec], num_vars: int) -> 'CharPoly':
        """相同的根按最大重数合并"""
        merged = {}
        for spec in roots:
            root, mult = spec if isinstance(spec, tuple) else (spec, 1)
            if root.num_vars != num_vars:
                raise ScopeError(f"根 {root} 的作用域与 n={num_vars} 不符")
            if mult < 1:
                raise UsageError(f"重数必须为正：{mult}")
            merged[root] = max(merged.get(root, 0), mult)
        ordered = tuple(sorted(merged.items(), key=lambda item: _root_order(item[0])))
        return cls(ordered, num_vars)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.roots)

    @property
    def root_set(self) -> List[MultivariatePolynomial]:
        return [r for r, _ in self.roots]

    def coefficients(self) -> List[MultivariatePolynomial]:
        """[1, c_1, ..., c_r]，使 Π (t - ρ) = Σ c_j t^{r-j}"""
        coeffs = [MultivariatePolynomial.one(self.num_vars)]
        for root, mult in self.roots:
            for _ in range(mult):
                nxt = coeffs + [MultivariatePolynomial.zero(self.num_vars)]
                for j in range(1, len(nxt)):
                    nxt[j] = nxt[j] - root * coeffs[j - 1]
                coeffs = nxt
        return coeffs

    def __str__(self) -> str:
        if not self.roots:
            return "1"
        parts = []
        for root, mult in self.roots:
            factor = f"(t - ({root}))"
            parts.append(factor if mult == 1 else f"{factor}^{mult}")
        return " * ".join(parts)


def char_coeffs(chi: CharPoly) -> List[MultivariatePolynomial]:
    """c_1..c_r"""
    return chi.coefficients()[1:]


# ====================================================
# 检验
# ====================================================

def _window_scope(window: Window) -> int:
    if not window:
        raise WindowTooShortError("空窗口")
    n = window[0].num_vars
    if any(a.num_vars != n for a in window):
        raise ScopeError("窗口内多项式作用域不一致")
    return n


def annihilation_residuals(chi: CharPoly, window: Window) -> List[MultivariatePolynomial]:
    """k = r..m 处的 a_k + Σ c_j a_{k-j}"""
    n = _window_scope(window)
    if n != chi.num_vars:
        raise ScopeError("特征多项式与窗口作用域不一致")
    r = chi.degree
    if len(window) < r + 1:
        raise WindowTooShortError(f"零化检验需要至少 {r + 1} 项，窗口只有 {len(window)} 项")
    coeffs = chi.coefficients()
    residuals = []
    for k in range(r, len(window)):
        total = MultivariatePolynomial.zero(n)
        for j, c in enumerate(coeffs):
            total = total + c * window[k - j]
        residuals.append(total)
    return residuals


def first_failure(chi: CharPoly, window: Window) -> Optional[int]:
    """第一个不被零化的下标，全部零化时为 None"""
    for offset, residual in enumerate(annihilation_residuals(chi, window)):
        if not residual.is_zero:
            return chi.degree + offset
    return None


def annihilates(chi: CharPoly, window: Window) -> bool:
    """窗口是否被 χ 精确零化（从 k = r 起的每一项）"""
    return first_failure(chi, window) is None


def determinant_test(window: Window, r: int) -> bool:
    """所有可构造的 r 阶行列式 det[a_{k+i-j}] 是否都为零

    >>> one = MultivariatePolynomial.one(1)
    >>> determinant_test([one] * 5, 1), determinant_test([one] * 5, 2)
    (False, True)
    """
    _window_scope(window)
    if r < 1:
        raise UsageError(f"行列式阶必须为正：{r}")
    if len(window) < 2 * r - 1:
        raise WindowTooShortError(f"{r} 阶行列式检验需要至少 {2 * r - 1} 项，窗口只有 {len(window)} 项")
    for k in range(r - 1, len(window) - r + 1):
        if not PolynomialMatrix.toeplitz_window(window, k, r).determinant().is_zero:
            logger.debug("determinant of order %d nonzero at k=%d", r, k)
            return False
    return True


def satisfies_order(window: Window, order: int) -> bool:
    """窗口是否与某个阶为 order 的线性递推相容（r+1 阶行列式全为零）"""
    return determinant_test(window, order + 1)


def detect_order(window: Window, max_order: int = 6) -> Optional[int]:
    """窗口长度允许范围内最小的相容递推阶；找不到时为 None"""
    for order in range(0, max_order + 1):
        if len(window) < 2 * order + 1:
            break
        if satisfies_order(window, order):
            return order
    return None


# ====================================================
# 闭包运算
# ====================================================

def seq_sum(chi_a: CharPoly, chi_b: CharPoly) -> CharPoly:
    """a + b：根取并，重数取大"""
    return CharPoly.from_roots(list(chi_a.roots) + list(chi_b.roots), chi_a.num_vars)


def seq_product(chi_a: CharPoly, chi_b: CharPoly) -> CharPoly:
    """a·b：根 ρσ，重数 p+q-1；乘积相撞时取最大重数"""
    if chi_a.num_vars != chi_b.num_vars:
        raise ScopeError("两个特征多项式作用域不一致")
    roots = [(r * s, p + q - 1) for r, p in chi_a.roots for s, q in chi_b.roots]
    return CharPoly.from_roots(roots, chi_a.num_vars)


def seq_decimate(chi: CharPoly, s: int) -> CharPoly:
    """k -> a_{sk}：根 ρ^s，重数不变；相撞时取最大重数"""
    if s < 1:
        raise UsageError(f"抽取步长必须为正：{s}")
    return CharPoly.from_roots([(r ** s, m) for r, m in chi.roots], chi.num_vars)


def general_form_window(components: Sequence[Tuple[MultivariatePolynomial, Sequence[Union[int, MultivariatePolynomial]]]],
                        kmax: int) -> List[MultivariatePolynomial]:
    """a_k = Σ_l ρ_l^k Σ_j g_{lj} k^j，k = 0..kmax"""
    if not components:
        raise UsageError("至少需要一个分量")
    n = components[0][0].num_vars
    window = []
    for k in range(kmax + 1):
        total = MultivariatePolynomial.zero(n)
        for root, gs in components:
            poly_k = MultivariatePolynomial.zero(n)
            for j, g in enumerate(gs):
                poly_k = poly_k + g * (k ** j)
            total = total + root ** k * poly_k
        window.append(total)
    return window


def column_block_window(monomials: Sequence[MultivariatePolynomial], kmax: int) -> List[MultivariatePolynomial]:
    """F_k = Σ_{a_1+...+a_l = k, a_i >= 1} Π z_i^{a_i}，且 F_0 = (-1)^{l+1}

    列块 (a_1 C_1, ..., a_l C_l) 的生成函数；被 Π (t - z_i) 零化。
    """
    if not monomials:
        raise UsageError("至少需要一种列")
    n = monomials[0].num_vars
    zero = MultivariatePolynomial.zero(n)
    # dp[s]：前若干块、总列数为 s 的和
    dp = [MultivariatePolynomial.one(n)] + [zero] * kmax
    for z in monomials:
        nxt = [zero] * (kmax + 1)
        for s in range(kmax + 1):
            if dp[s].is_zero:
                continue
            power = z
            for a in range(1, kmax - s + 1):
                nxt[s + a] = nxt[s + a] + dp[s] * power
                power = power * z
        dp = nxt
    dp[0] = MultivariatePolynomial.constant((-1) ** (len(monomials) + 1), n)
    return dp


# ====================================================
# 乘积型特征多项式
# ====================================================

def char_poly_family(family, diagram, basement=None) -> CharPoly:
    """Π (t - x^{σ(T)})，T 取遍 D 上的折叠列填充

    只对统计量线性且列闭合的族成立；否则抛出 UnsupportedProductError。
    """
    from fillingrec.core.enumeration import TransferGraph

    if not family.linear_statistic or not family.column_closed:
        raise UnsupportedProductError(f"{family.name} 没有乘积型特征多项式，请使用行列式检测")
    graph = TransferGraph(family, diagram, basement)
    exponents = graph.collapsed_root_exponents()
    roots = [MultivariatePolynomial.monomial(e, num_vars=family.num_vars) for e in exponents]
    return CharPoly.from_roots(roots, family.num_vars)


def char_poly_key(alpha: Sequence[int], n: Optional[int] = None) -> CharPoly:
    """key 多项式伸缩序列的特征多项式

    根取遍"等高列填充相同"的 key 表的权重：把 D_λ 的每个等高块压成一列，
    在压缩图上枚举 key 表 (C_1, ..., C_m)，根为 x^{Σ α_i w(C_i)}。
    全零组合给出 {1}。
    """
    from fillingrec.core.enumeration import enumerate_fillings
    from fillingrec.core.families import SSAFFamily
    from fillingrec.models.shapes import column_decomposition, diagram_from_columns, shape_data

    n = len(alpha) if n is None else n
    data = shape_data(alpha, n)
    blocks = column_decomposition(data.diagram)
    collapsed = diagram_from_columns([(1, shape) for _, shape in blocks])
    family = SSAFFamily(n, n)
    roots = set()
    for filling in enumerate_fillings(family, collapsed, data.basement):
        exps = [0] * n
        for j, (mult, _) in enumerate(blocks, start=1):
            for value in filling.column(j).values():
                exps[value - 1] += mult
        roots.add(tuple(exps))
    return CharPoly.from_roots([MultivariatePolynomial.monomial(e, num_vars=n) for e in roots], n)


# ====================================================
# 特殊化与插值
# ====================================================

@dataclass(frozen=True)
class FittedPolynomial:
    """k 的有理系数多项式及其验证信息"""

    coefficients: Tuple[Fraction, ...]
    degree_bound: int
    samples: Tuple[int, ...]
    held_out: Tuple[Tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def __call__(self, k: int) -> Fraction:
        return evaluate(self.coefficients, k)


def evaluate(coefficients: Sequence[Fraction], k: int) -> Fraction:
    total = Fraction(0)
    for c in reversed(coefficients):
        total = total * k + c
    return total


def interpolate(points: Sequence[Tuple[int, int]]) -> Tuple[Fraction, ...]:
    """过给定点的唯一插值多项式（Lagrange，精确有理数），去掉高次零系数"""
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise UsageError("插值节点必须互异")
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d, b in enumerate(basis):
            coeffs[d] += Fraction(yi) * b / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def specialize_and_fit(alpha: Sequence[int], n: Optional[int] = None, kmax: Optional[int] = None,
                       margin: int = 1) -> FittedPolynomial:
    """K_{kα}(1^n) 作为 k 的多项式

    次数上界为 r-1（r 为 char_poly_key 的根数，特殊化后全部根变为 1）；
    用 k = 0..kmax 插值，再用之后的 margin 个样本验证。
    """
    from fillingrec.core.generators import key_window

    n = len(alpha) if n is None else n
    r = char_poly_key(alpha, n).degree
    bound = r - 1
    kmax = bound + 1 if kmax is None else kmax
    if kmax < bound + 1:
        raise WindowTooShortError(f"kmax={kmax} 不足以确定次数 <= {bound} 的多项式（需要 kmax >= {bound + 1}）")
    window = key_window(alpha, n, kmax + margin)
    ones = {i: 1 for i in range(1, n + 1)}
    values = [substitute(p, ones).constant_value for p in window]
    coeffs = interpolate(list(enumerate(values[:kmax + 1])))
    if len(coeffs) - 1 > bound:
        raise InconsistencyError(f"插值次数 {len(coeffs) - 1} 超过上界 {bound}")
    held_out = tuple((k, values[k]) for k in range(kmax + 1, kmax + 1 + margin))
    for k, value in held_out:
        if evaluate(coeffs, k) != value:
            raise InconsistencyError(f"插值多项式在 k={k} 处与 K_{{kα}}(1^n) 不符")
    return FittedPolynomial(coeffs, bound, tuple(range(kmax + 1)), held_out)


__all__ = [
    'CharPoly', 'char_coeffs', 'annihilation_residuals', 'first_failure', 'annihilates',
    'determinant_test', 'satisfies_order', 'detect_order',
    'seq_sum', 'seq_product', 'seq_decimate',
    'general_form_window', 'column_block_window',
    'char_poly_family', 'char_poly_key',
    'FittedPolynomial', 'evaluate', 'interpolate', 'specialize_and_fit',
]
