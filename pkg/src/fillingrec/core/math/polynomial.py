"""填充递推库：精确整系数多项式核心

本模块定义 MultivariatePolynomial，变量为 x_1..x_n 与参数 t，系数为 Python int。
x 的指数允许为负（Laurent，用于辛 Schur 多项式），t 的指数非负。
提供：
- 加、减、乘、幂与规范化相等
- 代入（整数或多项式）与变量置换
- 差商 ∂_i 与 Demazure 算子 π_i
- 按单项式序的精确多元除法

单项式以长度 n+1 的指数元组表示，最后一位是 t 的指数；
零系数从不存储，因此同一多项式只有一种表示。

依赖: 无（纯整数运算）
理论依据: 决策记录 001：全程精确整数运算
"""

import heapq
from typing import Dict, Iterable, Iterator, List, Mapping, NewType, Optional, Tuple, Union

from fillingrec.core.errors import (
    InvariantViolation,
    NonExactDivisionError,
    ScopeError,
    SingularSubstitutionError,
    UsageError,
)

Monomial = NewType('Monomial', Tuple[int, ...])
Scalar = int
VariableKey = Union[int, str]  # 1..n 表示 x_i，'t' 表示参数 t


def _canonical_key(mono: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    """规范序：先比 t 指数，再比 x 指数元组"""
    return (mono[-1], mono[:-1])


class MultivariatePolynomial:
    """Z[t][x_1^{±1}, ..., x_n^{±1}] 中的元素

    参数
    ----------
    num_vars : int
        x 变量个数 n（作用域）；不同作用域的多项式不能直接运算
    terms : Mapping[Tuple[int, ...], int], optional
        单项式到系数的映射，零系数会被丢弃

    示例
    --------
    >>> x1 = MultivariatePolynomial.x(1, 2)
    >>> x2 = MultivariatePolynomial.x(2, 2)
    >>> str((x1 + x2) ** 2)
    'x_1^2 + 2*x_1*x_2 + x_2^2'
    """

    __slots__ = ('num_vars', '_terms', '_hash')

    def __init__(self, num_vars: int, terms: Optional[Mapping[Tuple[int, ...], int]] = None):
        if num_vars < 0:
            raise UsageError(f"变量个数必须非负，收到 {num_vars}")
        self.num_vars = num_vars
        clean: Dict[Tuple[int, ...], int] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != num_vars + 1:
                raise ScopeError(f"单项式 {mono} 与作用域 n={num_vars} 不符")
            if mono[-1] < 0:
                raise UsageError("t 的指数不能为负")
            coeff = int(coeff)
            if coeff:
                clean[mono] = clean.get(mono, 0) + coeff
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash: Optional[int] = None

    # ---------- 构造 ----------
    @classmethod
    def zero(cls, num_vars: int) -> 'MultivariatePolynomial':
        return cls(num_vars)

    @classmethod
    def constant(cls, value: int, num_vars: int) -> 'MultivariatePolynomial':
        return cls(num_vars, {(0,) * (num_vars + 1): value})

    @classmethod
    def one(cls, num_vars: int) -> 'MultivariatePolynomial':
        return cls.constant(1, num_vars)

    @classmethod
    def x(cls, i: int, num_vars: int) -> 'MultivariatePolynomial':
        """变量 x_i（1 起）"""
        if not 1 <= i <= num_vars:
            raise ScopeError(f"x_{i} 不在作用域 n={num_vars} 内")
        exps = [0] * (num_vars + 1)
        exps[i - 1] = 1
        return cls(num_vars, {tuple(exps): 1})

    @classmethod
    def t(cls, num_vars: int) -> 'MultivariatePolynomial':
        return cls(num_vars, {(0,) * num_vars + (1,): 1})

    @classmethod
    def monomial(cls, x_exps: Iterable[int], t_exp: int = 0, coeff: int = 1,
                 num_vars: Optional[int] = None) -> 'MultivariatePolynomial':
        """由 x 指数向量与 t 指数构造单项式；num_vars 缺省为向量长度"""
        x_exps = tuple(x_exps)
        n = len(x_exps) if num_vars is None else num_vars
        if len(x_exps) > n:
            raise ScopeError(f"指数向量长度 {len(x_exps)} 超出作用域 n={n}")
        padded = x_exps + (0,) * (n - len(x_exps))
        return cls(n, {padded + (t_exp,): coeff})

    # ---------- 查询 ----------
    def items(self) -> List[Tuple[Tuple[int, ...], int]]:
        """按规范序排列的 (单项式, 系数) 列表"""
        return sorted(self._terms.items(), key=lambda item: _canonical_key(item[0]))

    def __iter__(self) -> Iterator[Tuple[Tuple[int, ...], int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, x_exps: Iterable[int], t_exp: int = 0) -> int:
        return self._terms.get(tuple(x_exps) + (t_exp,), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        zero = (0,) * (self.num_vars + 1)
        return all(m == zero for m in self._terms)

    @property
    def constant_value(self) -> int:
        if not self.is_constant:
            raise UsageError(f"{self} 不是常数")
        return self._terms.get((0,) * (self.num_vars + 1), 0)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def is_laurent(self) -> bool:
        """是否含负 x 指数"""
        return any(e < 0 for m in self._terms for e in m[:-1])

    def homogeneous_part(self, degree: int) -> 'MultivariatePolynomial':
        """x 总次数等于 degree 的齐次分量"""
        return MultivariatePolynomial(
            self.num_vars, {m: c for m, c in self._terms.items() if sum(m[:-1]) == degree})

    def leading_term(self) -> Tuple[Tuple[int, ...], int]:
        """按指数元组字典序的首项（除法所用的单项式序）"""
        if not self._terms:
            raise UsageError("零多项式没有首项")
        mono = max(self._terms)
        return mono, self._terms[mono]

    # ---------- 运算 ----------
    def _coerce(self, other) -> 'MultivariatePolynomial':
        if isinstance(other, MultivariatePolynomial):
            if other.num_vars != self.num_vars:
                raise ScopeError(f"作用域不一致：n={self.num_vars} 与 n={other.num_vars}")
            return other
        if isinstance(other, int):
            return MultivariatePolynomial.constant(other, self.num_vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return MultivariatePolynomial(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultivariatePolynomial(self.num_vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Tuple[int, ...], int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return MultivariatePolynomial(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_monomial:
                raise SingularSubstitutionError(f"{self} 在 Laurent 环中不可逆")
            (mono, coeff), = self._terms.items()
            if coeff not in (1, -1) or mono[-1] != 0:
                raise SingularSubstitutionError(f"{self} 在 Laurent 环中不可逆")
            inverse = MultivariatePolynomial(
                self.num_vars, {tuple(-e for e in mono): coeff})
            return inverse ** (-exponent)
        result = MultivariatePolynomial.one(self.num_vars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultivariatePolynomial.constant(other, self.num_vars)
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ---------- 显示 ----------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, coeff in sorted(self._terms.items(), reverse=True):
            factors = []
            for i, e in enumerate(mono[:-1], start=1):
                if e == 1:
                    factors.append(f"x_{i}")
                elif e:
                    factors.append(f"x_{i}^{e}")
            if mono[-1] == 1:
                factors.append("t")
            elif mono[-1]:
                factors.append(f"t^{mono[-1]}")
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"MultivariatePolynomial(n={self.num_vars}, {self})"


Polynomial = MultivariatePolynomial


# ====================================================
# 函数式接口
# ====================================================

def poly_add(p: MultivariatePolynomial, q: MultivariatePolynomial) -> MultivariatePolynomial:
    return p + q


def poly_mul(p: MultivariatePolynomial, q: MultivariatePolynomial) -> MultivariatePolynomial:
    return p * q


def substitute(p: MultivariatePolynomial,
               assignment: Mapping[VariableKey, Union[int, MultivariatePolynomial]]) -> MultivariatePolynomial:
    """代入：assignment 的键为 1..n（x_i）或 't'，值为整数或同作用域多项式

    负指数变量只能代入可逆值（±1 或系数为 ±1 的单项式）。
    结果作用域与 p 相同。

    >>> x1, x2 = MultivariatePolynomial.x(1, 2), MultivariatePolynomial.x(2, 2)
    >>> substitute(x1 + x2, {1: 1, 2: 1}) == 2
    True
    """
    n = p.num_vars
    slots: Dict[int, Union[int, MultivariatePolynomial]] = {}
    for key, value in assignment.items():
        if key == 't':
            index = n
        elif isinstance(key, int) and 1 <= key <= n:
            index = key - 1
        else:
            raise ScopeError(f"变量 {key!r} 不在作用域 n={n} 内")
        if isinstance(value, MultivariatePolynomial) and value.num_vars != n:
            raise ScopeError(f"代入值作用域 n={value.num_vars} 与 n={n} 不符")
        slots[index] = value

    cache: Dict[Tuple[int, int], Union[int, MultivariatePolynomial]] = {}

    def power(index: int, e: int):
        key = (index, e)
        if key not in cache:
            value = slots[index]
            if isinstance(value, int):
                if e < 0:
                    if value not in (1, -1):
                        raise SingularSubstitutionError(
                            f"负指数变量代入了不可逆整数 {value}")
                    cache[key] = value ** (-e)
                else:
                    cache[key] = value ** e
            else:
                cache[key] = value ** e
        return cache[key]

    result = MultivariatePolynomial.zero(n)
    for mono, coeff in p.items():
        kept = list(mono)
        factor: Union[int, MultivariatePolynomial] = coeff
        for index in slots:
            e = mono[index]
            if e:
                kept[index] = 0
                factor = factor * power(index, e)
        rest = MultivariatePolynomial(n, {tuple(kept): 1})
        result = result + rest * factor
    return result


def permute_vars(p: MultivariatePolynomial, sigma: Tuple[int, ...]) -> MultivariatePolynomial:
    """x_i -> x_{σ(i)}，σ 为一行记号的置换（1 起）"""
    n = p.num_vars
    if sorted(sigma) != list(range(1, n + 1)):
        raise ScopeError(f"{sigma} 不是 S_{n} 中的置换")
    terms = {}
    for mono, coeff in p.items():
        new = [0] * (n + 1)
        for i, e in enumerate(mono[:-1]):
            new[sigma[i] - 1] = e
        new[n] = mono[n]
        terms[tuple(new)] = coeff
    return MultivariatePolynomial(n, terms)


def swap_vars(p: MultivariatePolynomial, i: int) -> MultivariatePolynomial:
    """单纯对换 s_i：交换 x_i 与 x_{i+1}"""
    n = p.num_vars
    if not 1 <= i < n:
        raise ScopeError(f"s_{i} 不在 S_{n} 中")
    sigma = list(range(1, n + 1))
    sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
    return permute_vars(p, tuple(sigma))


def exact_divide(p: MultivariatePolynomial, d: MultivariatePolynomial) -> MultivariatePolynomial:
    """精确除法 p / d

    按指数元组字典序做首项消去；该序与 Laurent 乘法相容，因此整除时商唯一。
    商的每个指数被限制在由 p、d 的指数范围决定的盒子内，越界即判定不整除，
    保证 Laurent 情形下也会终止。

    异常
    ------
    NonExactDivisionError
        d 不整除 p
    """
    if p.num_vars != d.num_vars:
        raise ScopeError(f"作用域不一致：n={p.num_vars} 与 n={d.num_vars}")
    if d.is_zero:
        raise UsageError("除数为零")
    n = p.num_vars
    if p.is_zero:
        return MultivariatePolynomial.zero(n)

    width = n + 1
    p_monos = list(p._terms)
    d_monos = list(d._terms)
    lower = [min(m[j] for m in p_monos) - min(m[j] for m in d_monos) for j in range(width)]
    upper = [max(m[j] for m in p_monos) - max(m[j] for m in d_monos) for j in range(width)]
    lower[n] = max(lower[n], 0)

    lt_mono, lt_coeff = d.leading_term()
    remainder = dict(p._terms)
    heap = [tuple(-e for e in m) for m in remainder]
    heapq.heapify(heap)
    quotient: Dict[Tuple[int, ...], int] = {}

    while heap:
        mono = tuple(-e for e in heapq.heappop(heap))
        coeff = remainder.get(mono, 0)
        if coeff == 0:
            continue
        q_mono = tuple(a - b for a, b in zip(mono, lt_mono))
        if any(q_mono[j] < lower[j] or q_mono[j] > upper[j] for j in range(width)):
            raise NonExactDivisionError(f"{d} 不整除 {p}")
        if coeff % lt_coeff:
            raise NonExactDivisionError(f"{d} 不整除 {p}（系数）")
        q_coeff = coeff // lt_coeff
        quotient[q_mono] = q_coeff
        for dm, dc in d._terms.items():
            m = tuple(a + b for a, b in zip(q_mono, dm))
            value = remainder.get(m, 0) - q_coeff * dc
            if value:
                if m not in remainder:
                    heapq.heappush(heap, tuple(-e for e in m))
                remainder[m] = value
            else:
                remainder.pop(m, None)

    return MultivariatePolynomial(n, quotient)


def divided_difference(p: MultivariatePolynomial, i: int) -> MultivariatePolynomial:
    """差商 ∂_i(p) = (p - s_i p) / (x_i - x_{i+1})"""
    n = p.num_vars
    if not 1 <= i < n:
        raise ScopeError(f"∂_{i} 不在 n={n} 的作用域内")
    if p.is_laurent:
        raise UsageError("差商只作用于非负指数多项式")
    numerator = p - swap_vars(p, i)
    denominator = MultivariatePolynomial.x(i, n) - MultivariatePolynomial.x(i + 1, n)
    try:
        return exact_divide(numerator, denominator)
    except NonExactDivisionError as exc:
        raise InvariantViolation(f"∂_{i} 的分子不被 x_{i} - x_{i+1} 整除") from exc


def pi_op(p: MultivariatePolynomial, i: int) -> MultivariatePolynomial:
    """Demazure 算子 π_i(p) = ∂_i(x_i p)"""
    return divided_difference(MultivariatePolynomial.x(i, p.num_vars) * p, i)


def vandermonde(num_vars: int) -> MultivariatePolynomial:
    """Δ = Π_{i<j} (x_i - x_j)"""
    result = MultivariatePolynomial.one(num_vars)
    for i in range(1, num_vars + 1):
        for j in range(i + 1, num_vars + 1):
            result = result * (MultivariatePolynomial.x(i, num_vars) - MultivariatePolynomial.x(j, num_vars))
    return result


def t_integer(m: int, num_vars: int) -> MultivariatePolynomial:
    """[m]_t = 1 + t + ... + t^{m-1}"""
    return MultivariatePolynomial(num_vars, {(0,) * num_vars + (j,): 1 for j in range(m)})


def t_factorial(m: int, num_vars: int) -> MultivariatePolynomial:
    """[m]_t! = [1]_t [2]_t ... [m]_t"""
    result = MultivariatePolynomial.one(num_vars)
    for j in range(1, m + 1):
        result = result * t_integer(j, num_vars)
    return result


__all__ = [
    'Monomial', 'MultivariatePolynomial', 'Polynomial',
    'poly_add', 'poly_mul', 'substitute', 'permute_vars', 'swap_vars',
    'exact_divide', 'divided_difference', 'pi_op',
    'vandermonde', 't_integer', 't_factorial',
]
