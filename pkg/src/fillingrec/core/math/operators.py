"""填充递推库：差商算子侧

本模块以 ∂_i、π_i 为基础给出 key 多项式与 Schubert 多项式的算子定义，
作为填充侧的独立交叉校验。

置换约定：
- 一行记号，1 起；ω = s_{i_1} s_{i_2} ... s_{i_l} 表示从恒等置换开始依次右乘，
  右乘 s_i 交换第 i、i+1 个位置
- 置换作用在组合上：(ω·α)_{ω(i)} = α_i
- 算子串 π_{i_1} ∘ ... ∘ π_{i_l} 先作用最右边的 π_{i_l}

依赖:
    - core.math.polynomial（divided_difference, pi_op）
"""

from functools import lru_cache
from typing import Callable, List, NewType, Optional, Sequence, Tuple

from fillingrec.core.constants import constants
from fillingrec.core.errors import InconsistencyError, UsageError
from fillingrec.core.math.polynomial import MultivariatePolynomial, divided_difference, pi_op

Permutation = NewType('Permutation', Tuple[int, ...])


def as_permutation(values: Sequence[int]) -> Permutation:
    values = tuple(values)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise UsageError(f"{values} 不是一行记号的置换")
    return Permutation(values)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """最长元 ω_0 = n ... 1"""
    return Permutation(tuple(range(n, 0, -1)))


def compose(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """(u∘v)(i) = u(v(i))"""
    return Permutation(tuple(u[v[i] - 1] for i in range(len(v))))


def inverse(w: Sequence[int]) -> Permutation:
    inv = [0] * len(w)
    for i, value in enumerate(w, start=1):
        inv[value - 1] = i
    return Permutation(tuple(inv))


def length(w: Sequence[int]) -> int:
    """逆序数"""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def apply_word(word: Sequence[int], n: int) -> Permutation:
    """s_{i_1} ... s_{i_l} 的一行记号"""
    w = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise UsageError(f"s_{i} 不在 S_{n} 中")
        w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(tuple(w))


def act_on_composition(w: Sequence[int], alpha: Sequence[int]) -> Tuple[int, ...]:
    """(w·α)_{w(i)} = α_i"""
    if len(w) != len(alpha):
        raise UsageError("置换与组合长度不一致")
    out = [0] * len(alpha)
    for i, a in enumerate(alpha):
        out[w[i] - 1] = a
    return tuple(out)


def reduced_word(w: Sequence[int]) -> List[int]:
    """某个约化字 (i_1..i_l)，满足 s_{i_1}...s_{i_l} = w

    反复找位置不对的最大值所在的下降位 p，右乘 s_p 把它后移一格，
    记下 p；所记序列倒序即为约化字。
    """
    w = list(as_permutation(w))
    recorded = []
    while True:
        misplaced = [v for p, v in enumerate(w, start=1) if v != p]
        if not misplaced:
            break
        value = max(misplaced)
        p = w.index(value) + 1
        w[p - 1], w[p] = w[p], w[p - 1]
        recorded.append(p)
    return list(reversed(recorded))


@lru_cache(maxsize=None)
def _reduced_words(w: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    descents = [i for i in range(1, len(w)) if w[i - 1] > w[i]]
    if not descents:
        return ((),)
    words = []
    for i in descents:
        shorter = list(w)
        shorter[i - 1], shorter[i] = shorter[i], shorter[i - 1]
        words.extend(word + (i,) for word in _reduced_words(tuple(shorter)))
    return tuple(sorted(words))


def all_reduced_words(w: Sequence[int]) -> List[Tuple[int, ...]]:
    return list(_reduced_words(tuple(as_permutation(w))))


def sorting_permutation(alpha: Sequence[int]) -> Permutation:
    """稳定排序置换 u：u·α 为 α 的递减重排"""
    order = sorted(range(len(alpha)), key=lambda i: -alpha[i])
    u = [0] * len(alpha)
    for position, i in enumerate(order, start=1):
        u[i] = position
    return Permutation(tuple(u))


def apply_operators(p: MultivariatePolynomial, word: Sequence[int],
                    operator: Callable[[MultivariatePolynomial, int], MultivariatePolynomial]) -> MultivariatePolynomial:
    """operator_{i_1} ∘ ... ∘ operator_{i_l}(p)"""
    for i in reversed(word):
        p = operator(p, i)
    return p


def key_via_operators(alpha: Sequence[int], n: Optional[int] = None,
                      word: Optional[Sequence[int]] = None) -> MultivariatePolynomial:
    """π_{u^{-1}} x^λ，u 为 α 的稳定排序置换；word 缺省取 u^{-1} 的一个约化字"""
    alpha = tuple(alpha)
    n = len(alpha) if n is None else n
    if len(alpha) > n:
        raise UsageError(f"组合长度 {len(alpha)} 超过 n={n}")
    alpha = alpha + (0,) * (n - len(alpha))
    u = sorting_permutation(alpha)
    target = inverse(u)
    if word is None:
        word = reduced_word(target)
    elif apply_word(word, n) != target or len(word) != length(target):
        raise UsageError(f"{list(word)} 不是 {target} 的约化字")
    lam = act_on_composition(u, alpha)
    return apply_operators(MultivariatePolynomial.monomial(lam, num_vars=n), word, pi_op)


def schubert(w: Sequence[int], word: Optional[Sequence[int]] = None) -> MultivariatePolynomial:
    """𝔖_ω = ∂_{ω^{-1} ω_0} x_1^{n-1} x_2^{n-2} ... x_{n-1}"""
    w = as_permutation(w)
    n = len(w)
    target = compose(inverse(w), longest(n))
    if word is None:
        word = reduced_word(target)
    elif apply_word(word, n) != target or len(word) != length(target):
        raise UsageError(f"{list(word)} 不是 {target} 的约化字")
    staircase = MultivariatePolynomial.monomial(tuple(range(n - 1, -1, -1)), num_vars=n)
    return apply_operators(staircase, word, divided_difference)


def apply_index_map(alpha: Sequence[int], index_map: str = None) -> Tuple[int, ...]:
    index_map = index_map or constants.KEY_INDEX_MAP
    if index_map == 'identity':
        return tuple(alpha)
    if index_map == 'reverse':
        return tuple(reversed(tuple(alpha)))
    raise UsageError(f"未知下标映射：{index_map}")


def discover_index_map(max_size: int = 4, max_n: int = 3) -> str:
    """在 |α| <= max_size、n <= max_n 上找出使两侧 key 多项式一致的下标映射"""
    from itertools import product

    from fillingrec.core.generators import key_polynomial

    cases = []
    for n in range(1, max_n + 1):
        for alpha in product(range(max_size + 1), repeat=n):
            if sum(alpha) <= max_size:
                cases.append((alpha, key_polynomial(alpha, n)))
    matches = [name for name in constants.INDEX_MAP_CANDIDATES
               if all(key_via_operators(apply_index_map(alpha, name), len(alpha)) == poly
                      for alpha, poly in cases)]
    if len(matches) != 1:
        raise InconsistencyError(f"下标映射不唯一或不存在：{matches}")
    return matches[0]


__all__ = [
    'Permutation', 'as_permutation', 'identity', 'longest', 'compose', 'inverse', 'length',
    'apply_word', 'act_on_composition', 'reduced_word', 'all_reduced_words',
    'sorting_permutation', 'apply_operators', 'key_via_operators', 'schubert',
    'apply_index_map', 'discover_index_map',
]
