from fractions import Fraction
from itertools import groupby, product

import pytest

from fillingrec.core import generators as g
from fillingrec.core.enumeration import enumerate_fillings
from fillingrec.core.errors import ScopeError, UnsupportedProductError, UsageError, WindowTooShortError
from fillingrec.core.families import SSYTFamily
from fillingrec.core.math.polynomial import MultivariatePolynomial as P, substitute
from fillingrec.core.math.recurrence import (
    CharPoly,
    annihilates,
    char_coeffs,
    char_poly_family,
    char_poly_key,
    column_block_window,
    detect_order,
    determinant_test,
    first_failure,
    general_form_window,
    interpolate,
    satisfies_order,
    seq_decimate,
    seq_product,
    seq_sum,
    specialize_and_fit,
)
from fillingrec.models.shapes import diagram_from_composition, is_partition


def _const(values):
    return [P.constant(v, 1) for v in values]


def test_determinant_test_basics():
    """测试1：常数列与 a_k = k 的行列式检验"""
    ones = _const([1] * 5)
    assert determinant_test(ones, 1) is False
    assert determinant_test(ones, 2) is True
    assert satisfies_order(ones, 1)

    linear = _const(range(5))
    assert not satisfies_order(linear, 1), "a_k = k 不满足一阶递推"
    assert satisfies_order(linear, 2)
    assert detect_order(linear) == 2
    assert detect_order(_const([0] * 3)) == 0

    with pytest.raises(WindowTooShortError):
        determinant_test(_const([1, 1]), 2)
    with pytest.raises(UsageError):
        determinant_test(ones, 0)


def test_char_coeffs():
    """测试2：特征多项式系数"""
    x1, x2 = P.x(1, 2), P.x(2, 2)
    chi = CharPoly.from_roots([x1, x2], 2)
    assert chi.degree == 2
    assert char_coeffs(chi) == [-(x1 + x2), x1 * x2]
    assert CharPoly.from_roots([(x1, 2), (x1, 3)], 2).degree == 3, "相同的根取最大重数"
    with pytest.raises(ScopeError):
        CharPoly.from_roots([P.x(1, 1)], 2)


def test_multiplicity_needed():
    """测试3：(1+k³)(5x)^k 需要重数 4"""
    root = 5 * P.x(1, 1)
    window = general_form_window([(root, [1, 0, 0, 1])], 8)
    assert first_failure(CharPoly.from_roots([(root, 3)], 1), window) is not None
    assert annihilates(CharPoly.from_roots([(root, 4)], 1), window)


def test_closure_product_and_sum():
    """测试4：积与和的特征多项式"""
    x = P.x(1, 1)
    rho, sigma = 5 * x, 2 * x - 1
    chi_a = CharPoly.from_roots([(rho, 4)], 1)
    chi_b = CharPoly.from_roots([(sigma, 5)], 1)

    product = seq_product(chi_a, chi_b)
    assert product.roots == ((10 * x ** 2 - 5 * x, 8),)

    a = general_form_window([(rho, [0, 0, 0, 1])], 10)
    b = general_form_window([(sigma, [0, 0, 0, 0, 1])], 10)
    assert annihilates(product, [p * q for p, q in zip(a, b)])

    total = seq_sum(chi_a, chi_b)
    assert total.degree == 9
    assert annihilates(total, [p + q for p, q in zip(a, b)])


def test_decimation():
    """测试5：抽取子序列"""
    x = P.x(1, 1)
    chi = CharPoly.from_roots([(x, 2)], 1)
    window = general_form_window([(x, [1, 1])], 12)
    decimated = seq_decimate(chi, 2)
    assert decimated.roots == ((x ** 2, 2),)
    assert annihilates(decimated, window[::2])
    with pytest.raises(UsageError):
        seq_decimate(chi, 0)


def test_column_block_window():
    """测试6：列块序列被 Π(t - z_i) 零化"""
    x1, x2 = P.x(1, 2), P.x(2, 2)
    window = column_block_window([x1, x2], 6)
    assert window[0] == -1
    assert window[1] == 0
    assert window[2] == x1 * x2
    assert annihilates(CharPoly.from_roots([x1, x2], 2), window)


def test_char_poly_key():
    """测试7：key 多项式的特征多项式"""
    chi = char_poly_key((1, 0))
    assert set(chi.root_set) == {P.x(1, 2), P.x(2, 2)}
    assert chi.degree == 2
    assert char_poly_key((0, 0)).root_set == [P.one(2)]
    assert annihilates(chi, g.key_window((1, 0), 2, 5))


def test_char_poly_family_matches_key_route():
    """测试8：划分上两条路径给出相同的根"""
    problem = g.schur_problem((1,), 2)
    by_family = char_poly_family(problem.family, problem.diagram, problem.basement)
    assert set(by_family.root_set) == set(char_poly_key((1, 0)).root_set)


def test_no_product_for_nonlinear_families():
    """测试9：非线性统计量的族没有乘积公式"""
    problem = g.hl_E_problem((1, 0))
    with pytest.raises(UnsupportedProductError):
        char_poly_family(problem.family, problem.diagram, problem.basement)
    problem = g.grothendieck_problem((1,), 2)
    with pytest.raises(UnsupportedProductError):
        char_poly_family(problem.family, problem.diagram, problem.basement)


def test_schur_column_roots():
    """测试10：s_{k(1,1)} 在三个变量中被三根特征多项式零化，特殊化后为 C(k+2, 2)"""
    problem = g.schur_problem((1, 1), 3)
    chi = char_poly_family(problem.family, problem.diagram, problem.basement)
    assert chi.degree == 3
    window = g.dilation_window(problem, 6)
    assert annihilates(chi, window)
    ones = {i: 1 for i in range(1, 4)}
    assert [substitute(p, ones).constant_value for p in window] == [(k + 1) * (k + 2) // 2 for k in range(7)]


def test_interpolate_and_fit():
    """测试11：插值与特殊化拟合"""
    assert interpolate([(0, 1), (1, 3), (2, 7)]) == (Fraction(1), Fraction(1), Fraction(1))
    with pytest.raises(UsageError):
        interpolate([(0, 1), (0, 2)])

    fitted = specialize_and_fit((1, 0))
    assert fitted.coefficients == (Fraction(1), Fraction(1)), "K_{(k,0)}(1,1) = k + 1"
    assert fitted.nonnegative_coefficients
    assert fitted(5) == 6

    assert specialize_and_fit((0, 0)).coefficients == (Fraction(1),)
    with pytest.raises(WindowTooShortError):
        specialize_and_fit((1, 0), kmax=0)


def test_key_recurrence_small_compositions():
    """测试12：长度 <= 3、分量 <= 3 的全部组合，K_{kα} 被 char_poly_key 零化且根两两不同"""
    for n in range(1, 4):
        for alpha in product(range(4), repeat=n):
            chi = char_poly_key(alpha, n)
            assert all(m == 1 for _, m in chi.roots), f"α={alpha} 的根应为单根"
            assert len(set(chi.root_set)) == chi.degree
            assert annihilates(chi, g.key_window(alpha, n, chi.degree + 2)), f"α={alpha}"
            if n <= 2:
                window = g.key_window(alpha, n, 2 * chi.degree + 1)
                assert satisfies_order(window, chi.degree), f"α={alpha} 的行列式检验未通过"


def _hook_content(shape, n):
    parts = list(shape) + [0] * (n - len(shape))
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(parts[i] - parts[j] + j - i, j - i)
    return value


def test_hook_content_specialization():
    """测试13：λ ⊆ (3,3,3) 时 s_λ(1^3) 等于钩长-内容乘积；伸缩后与特殊化拟合一致"""
    ones = {i: 1 for i in range(1, 4)}
    shapes = [s for s in product(range(4), repeat=3) if is_partition(s)]
    assert len(shapes) == 20
    for shape in shapes:
        value = substitute(g.schur(shape, 3), ones).constant_value
        assert value == _hook_content(shape, 3), f"λ={shape}"

    fitted = specialize_and_fit((2, 1, 0), 3)
    for k in range(5):
        assert fitted(k) == _hook_content((2 * k, k), 3) == (k + 1) ** 3


def _block_sums(family, height, columns, kmax):
    """k = 1..kmax 列等高填充中，相邻相同列合并后恰为 columns 的那些的权重和"""
    sums = []
    for k in range(1, kmax + 1):
        total = P.zero(family.num_vars)
        for filling in enumerate_fillings(family, diagram_from_composition((k,) * height)):
            sequence = [tuple(c[i] for i in sorted(c)) for c in filling.columns()]
            if [key for key, _ in groupby(sequence)] == columns:
                total = total + family.filling_weight(filling)
        sums.append(total)
    return sums


@pytest.mark.parametrize("height, columns", [
    (1, [(2,)]),
    (1, [(1,), (3,)]),
    (1, [(1,), (2,), (3,)]),
    (2, [(1, 2), (2, 3)]),
    (2, [(1, 2), (1, 3), (2, 3)]),
])
def test_column_blocks_by_enumeration(height, columns):
    """测试14：列块生成函数在 k < l 时为零、k = l 时为各列单项式之积，补上 F_0 后被 Π(t - z_i) 零化"""
    family = SSYTFamily(3, 3)
    kmax = 5
    zs = [family.column_weight(dict(enumerate(c, start=1))) for c in columns]
    direct = _block_sums(family, height, columns, kmax)

    length = len(columns)
    for k in range(1, length):
        assert direct[k - 1].is_zero, f"k={k} 小于列种数 {length} 时应为零"
    full = P.one(3)
    for z in zs:
        full = full * z
    assert direct[length - 1] == full

    window = [P.constant((-1) ** (length + 1), 3)] + direct
    assert window == column_block_window(zs, kmax)
    assert annihilates(CharPoly.from_roots(zs, 3), window)
