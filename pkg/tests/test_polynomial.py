import random

import pytest

from fillingrec.core.errors import (
    InvariantViolation,
    NonExactDivisionError,
    ScopeError,
    SingularSubstitutionError,
    UsageError,
)
from fillingrec.core.math.matrix import PolynomialMatrix, determinant
from fillingrec.core.math.polynomial import (
    MultivariatePolynomial as P,
    divided_difference,
    exact_divide,
    permute_vars,
    pi_op,
    poly_add,
    poly_mul,
    substitute,
    swap_vars,
    t_factorial,
    vandermonde,
)


def _xs(n):
    return [P.x(i, n) for i in range(1, n + 1)]


def _random_poly(rng, n, terms=4):
    p = P.zero(n)
    for _ in range(terms):
        exps = [rng.randint(0, 2) for _ in range(n)]
        p = p + P.monomial(exps, rng.randint(0, 1), rng.randint(-3, 3), num_vars=n)
    return p


def test_addition_and_cancellation():
    """测试1：加法、加法逆元与零多项式"""
    x1, x2 = _xs(2)
    assert (x1 + (-x1)).is_zero, "x_1 + (-x_1) 应为零"
    assert x1 + x2 + x1 * x2 == x2 + x1 * x2 + x1, "加法应与顺序无关"
    assert str((x1 + x2) ** 2) == "x_1^2 + 2*x_1*x_2 + x_2^2"


def test_multiplication_examples():
    """测试2：乘法与 Laurent 指数"""
    x1, x2 = _xs(2)
    assert (x1 - x2) * (x1 + x2) == x1 ** 2 - x2 ** 2
    assert x1 ** -1 * x1 ** 2 == x1, "Laurent 指数应相加"
    assert (x1 * 1) == x1
    with pytest.raises(SingularSubstitutionError):
        (x1 + x2) ** -1


def test_ring_axioms_random():
    """测试3：随机小多项式上的环公理（固定种子）"""
    rng = random.Random(20240611)
    for _ in range(30):
        a, b, c = (_random_poly(rng, 2) for _ in range(3))
        assert (a * b) * c == a * (b * c), "乘法结合律"
        assert a * b == b * a, "乘法交换律"
        assert a * (b + c) == a * b + a * c, "分配律"


def test_substitute_is_ring_homomorphism():
    """测试3b：代入与加法、乘法可交换"""
    rng = random.Random(7)
    _, x2 = _xs(2)
    assignment = {1: x2 + 1, 't': 2}
    for _ in range(20):
        a, b = _random_poly(rng, 2), _random_poly(rng, 2)
        assert substitute(poly_add(a, b), assignment) == substitute(a, assignment) + substitute(b, assignment)
        assert substitute(poly_mul(a, b), assignment) == substitute(a, assignment) * substitute(b, assignment)


def test_scope_mismatch_rejected():
    """测试4：不同作用域的多项式不能运算"""
    with pytest.raises(ScopeError):
        P.x(1, 2) + P.x(1, 3)


def test_canonical_order_t_first():
    """测试5：规范序先比 t 指数再比 x 指数"""
    x1 = P.x(1, 1)
    t = P.t(1)
    p = t + x1 ** 2 + 1
    monos = [m for m, _ in p.items()]
    assert monos == [(0, 0), (2, 0), (0, 1)]


def test_substitute():
    """测试6：代入整数与多项式"""
    x1, x2 = _xs(2)
    t = P.t(2)
    assert substitute(x1 + x2, {1: 1, 2: 1}) == 2
    assert substitute(x1 ** 2 * x2 + t * x1, {'t': 0}) == x1 ** 2 * x2
    assert substitute(x1 * x2, {2: x1 + 1}) == x1 ** 2 + x1
    with pytest.raises(SingularSubstitutionError):
        substitute(x1 ** -1, {1: 2})
    assert substitute(x1 ** -1 + x1, {1: -1}) == -2
    with pytest.raises(ScopeError):
        substitute(x1, {3: 1})


def test_permute_vars():
    """测试7：变量置换"""
    x1, x2, x3 = _xs(3)
    assert swap_vars(x1, 1) == x2
    assert swap_vars(x1 ** 2 * x2, 1) == x2 ** 2 * x1
    e1 = x1 + x2 + x3
    for sigma in [(2, 3, 1), (3, 1, 2), (1, 3, 2)]:
        assert permute_vars(e1, sigma) == e1, "对称多项式在置换下不变"


def test_exact_divide():
    """测试8：精确除法恢复因子，不整除时报错"""
    x1, x2, x3 = _xs(3)
    f = x1 ** 2 + 3 * x2 * x3 - x1
    assert exact_divide(vandermonde(3) * f, vandermonde(3)) == f
    assert exact_divide((x1 ** -1 + x2) * (x1 - x3), x1 - x3) == x1 ** -1 + x2
    with pytest.raises(NonExactDivisionError):
        exact_divide(x1 + 1, x1 - x2)
    t = P.t(1)
    assert exact_divide(t_factorial(3, 1), 1 + t) == (1 + t + t ** 2)


def test_divided_difference_and_pi():
    """测试9：差商与 Demazure 算子的基本取值"""
    x1, x2 = _xs(2)
    assert divided_difference(x1, 1) == 1
    assert divided_difference(x1 * x2, 1).is_zero
    assert divided_difference(x1 ** 2, 1) == x1 + x2
    assert pi_op(P.one(2), 1) == 1
    assert pi_op(x1, 1) == x1 + x2
    assert pi_op(x2, 1).is_zero
    with pytest.raises(UsageError):
        divided_difference(x1 ** -1, 1)
    with pytest.raises(ScopeError):
        divided_difference(x1, 2)


def test_determinant_small():
    """测试10：小阶 Bareiss 行列式"""
    x1, x2 = _xs(2)
    assert determinant([[x1, x2], [x2, x1]]) == x1 ** 2 - x2 ** 2
    one = P.one(2)
    zero = P.zero(2)
    # 首主元为零时需要换行
    assert determinant([[zero, one, zero], [one, zero, zero], [zero, zero, x1]]) == -x1
    rows = [[P.constant(v, 1) for v in row] for row in [[2, 1, 0], [1, 3, 1], [0, 1, 4]]]
    assert PolynomialMatrix(rows).determinant() == 18


def test_operator_relations_random():
    """测试11：∂_i∂_i = 0、π_iπ_i = π_i、辫关系，|i - j| >= 2 时两者交换（固定种子）"""
    rng = random.Random(20240612)
    for _ in range(4):
        p = _random_poly(rng, 4)
        for i in (1, 2, 3):
            assert divided_difference(divided_difference(p, i), i).is_zero, f"∂_{i}∂_{i} 应为零"
            assert pi_op(pi_op(p, i), i) == pi_op(p, i), f"π_{i} 应幂等"
        for op in (divided_difference, pi_op):
            for i in (1, 2):
                left = op(op(op(p, i), i + 1), i)
                right = op(op(op(p, i + 1), i), i + 1)
                assert left == right, f"{op.__name__} 在 i={i} 处不满足辫关系"
            assert op(op(p, 1), 3) == op(op(p, 3), 1), f"{op.__name__} 的 1、3 应交换"
