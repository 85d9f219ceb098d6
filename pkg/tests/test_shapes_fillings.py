import random
from itertools import permutations, product

import pytest

from fillingrec.core import generators
from fillingrec.core.enumeration import enumerate_fillings
from fillingrec.core.errors import NotSortableError, ShapeError
from fillingrec.core.families import SSAFFamily
from fillingrec.models.fillings import (
    AugmentedFilling,
    attacking_pairs,
    coinv,
    delete_column,
    dn,
    duplicate_column,
    inversion_triples,
    sort_to_key,
    triple_configurations,
    weight,
)
from fillingrec.models.shapes import (
    BasementShape,
    column_decomposition,
    diagram_from_columns,
    diagram_from_composition,
    dilate,
    parse_composition,
    shape_data,
    skew_diagram,
)


def _general_atom_filling():
    """基底 (1,3,2,5,4)、形状 (0,3,1,3,4) 的半标准增广填充"""
    return AugmentedFilling.from_rows(
        [[], [3, 1, 1], [2], [5, 5, 5], [4, 4, 3, 2]], basement=(1, 3, 2, 5, 4))


def _example_filling():
    cells = {(1, 1): 1, (1, 2): 8, (2, 3): 9, (2, 4): 1, (3, 3): 5,
             (5, 4): 9, (5, 5): 2, (5, 6): 7}
    return AugmentedFilling.from_cells(cells)


def test_diagrams():
    """测试1：组合图、斜图与伸缩"""
    assert diagram_from_composition((0, 0)).is_empty
    assert diagram_from_composition((1, 0, 2)).boxes == {(1, 1), (3, 1), (3, 2)}
    assert skew_diagram((2, 2), (1, 0)).boxes == {(1, 2), (2, 1), (2, 2)}
    assert skew_diagram((2, 1), (2, 1)).is_empty
    assert dilate(skew_diagram((2, 1), (1, 0)), 3) == skew_diagram((6, 3), (3, 0))
    assert dilate(diagram_from_composition((2, 1)), 2) == diagram_from_composition((4, 2))
    assert dilate(diagram_from_composition((1,)), 3).boxes == {(1, 1), (1, 2), (1, 3)}
    with pytest.raises(ShapeError):
        skew_diagram((1, 1), (2,))


def test_dilate_composes():
    """测试2：dilate(dilate(D, a), b) = dilate(D, ab)"""
    D = skew_diagram((3, 2, 2), (1, 1))
    for a in range(1, 4):
        for b in range(1, 4):
            assert dilate(dilate(D, a), b) == dilate(D, a * b)


def test_column_decomposition():
    """测试3：等形列分块及其逆"""
    assert column_decomposition(diagram_from_composition((2, 2))) == [(2, (1, 2))]
    D = diagram_from_composition((3, 1))
    assert column_decomposition(D) == [(1, (1, 2)), (2, (1,))]
    assert column_decomposition(dilate(D, 2)) == [(2, (1, 2)), (4, (1,))]
    assert diagram_from_columns(column_decomposition(D)) == D


def test_shape_data():
    """测试4：key 形状数据 (β(α), λ(α))"""
    data = shape_data((0, 2, 3, 4, 2, 0, 1), 7)
    assert data.basement == (4, 5, 6, 3, 1)
    assert data.shape == (4, 3, 2, 2, 1)
    doubled = shape_data((0, 4, 6, 8, 4, 0, 2), 7)
    assert doubled.basement == (4, 5, 6, 3, 1)
    assert doubled.shape == (8, 6, 4, 4, 2)
    empty = shape_data((0, 0, 0))
    assert empty.basement == () and empty.shape == ()
    with pytest.raises(ShapeError):
        BasementShape((1, 1), (2, 1))


def test_parse_composition():
    """测试5：命令行组合解析"""
    assert parse_composition("0,2,3") == (0, 2, 3)
    assert parse_composition(" ") == ()
    with pytest.raises(ShapeError):
        parse_composition("1,a")
    with pytest.raises(ShapeError):
        parse_composition("1,-2")


def test_general_atom_filling_is_ssaf():
    """测试6：示例填充是 SSAF，且没有攻击对与逆序三元组"""
    T = _general_atom_filling()
    assert SSAFFamily(5, 5).is_member(T), "示例填充应是 SSAF"
    assert attacking_pairs(T) == []
    assert inversion_triples(T) == []
    assert coinv(T) == 0
    assert weight(T, 5) == (2, 2, 2, 2, 3)
    assert triple_configurations(T), "示例填充中存在三元组位置"


def test_attacking_pair_with_basement():
    """测试7：基底格子也参与攻击"""
    T = AugmentedFilling.from_cells({(2, 1): 1}, basement=(1, 2))
    assert attacking_pairs(T) == [((1, 0), (2, 1))]
    single = AugmentedFilling.from_cells({(1, 1): 1})
    assert attacking_pairs(single) == []


def test_dn():
    """测试8：dn 计数行内相邻不等对"""
    row = AugmentedFilling.from_rows([[5, 3]], basement=(5,))
    assert dn(row, include_basement=True) == 1
    assert dn(row, include_basement=False) == 1
    one_column = AugmentedFilling.from_rows([[2]], basement=(3,))
    assert dn(one_column, include_basement=False) == 0
    assert dn(one_column, include_basement=True) == 1


def test_column_surgery_example():
    """测试9：删除第 4 列、把第 3 列复制为三份"""
    T = duplicate_column(delete_column(_example_filling(), 4), 3, 3)
    expected = {(1, 1): 1, (1, 2): 8,
                (2, 3): 9, (2, 4): 9, (2, 5): 9,
                (3, 3): 5, (3, 4): 5, (3, 5): 5,
                (5, 6): 2, (5, 7): 7}
    assert T.as_dict() == expected
    outer, inner = T.skew_shape()
    assert [outer[i] for i in (0, 1, 2, 4)] == [2, 5, 5, 7]
    assert [inner[i] for i in (0, 1, 2, 4)] == [0, 2, 2, 5]
    assert duplicate_column(T, 2, 1) == T, "m=1 不改变填充"


def test_column_surgery_roundtrip_and_closure():
    """测试10：复制后删除恢复原填充；SSAF 对列复制封闭"""
    T = _general_atom_filling()
    family = SSAFFamily(5, 5)
    for j in range(1, T.num_columns + 1):
        doubled = duplicate_column(T, j, 2)
        assert delete_column(doubled, j) == T
        assert family.is_member(doubled), f"复制第 {j} 列后应仍是 SSAF"
        base = weight(T, 5)
        extra = [0] * 5
        for v in T.column(j).values():
            extra[v - 1] += 1
        assert weight(doubled, 5) == tuple(a + b for a, b in zip(base, extra))
    only = AugmentedFilling.from_cells({(1, 1): 2})
    assert delete_column(only, 1).cells == ()


def test_sort_to_key_example():
    """测试11：列排序引理的算例"""
    T = sort_to_key([[8, 5, 4, 1], [4, 3, 2, 2], [6, 6, 5], [7, 4]])
    assert T.basement == (8, 4, 6, 7)
    assert T.rows() == {1: [6, 5, 2], 2: [4, 4, 1], 3: [5, 2], 4: [3]}
    assert SSAFFamily(8, 8).is_member(T), "排序结果应是 SSAF"


def test_sort_to_key_fixed_point_and_errors():
    """测试12：已排好的 key 表不变；非法输入被拒绝"""
    rows = [[8, 6, 5, 2], [4, 4, 4, 1], [6, 5, 2], [7, 3]]
    T = sort_to_key(rows)
    assert [T.basement[i] for i in range(4)] == [8, 4, 6, 7]
    assert T.rows() == {1: [6, 5, 2], 2: [4, 4, 1], 3: [5, 2], 4: [3]}
    with pytest.raises(NotSortableError):
        sort_to_key([[3, 4]])
    with pytest.raises(NotSortableError):
        sort_to_key([[3, 2], [3, 1]])
    with pytest.raises(NotSortableError):
        sort_to_key([[3], [2, 1]])


def _random_sortable_rows(rng, max_height=4, max_length=3, top=7):
    """首列互异、行弱递减、列互异、行长 1+λ 的随机输入"""
    while True:
        height = rng.randint(1, max_height)
        basement = rng.sample(range(1, top + 1), height)
        lengths = sorted((rng.randint(0, max_length) for _ in range(height)), reverse=True)
        rows = [[b] for b in basement]
        stuck = False
        for j in range(1, lengths[0] + 1):
            used = set()
            for i in range(height):
                if lengths[i] < j:
                    continue
                choices = [v for v in range(1, rows[i][j - 1] + 1) if v not in used]
                if not choices:
                    stuck = True
                    break
                value = rng.choice(choices)
                used.add(value)
                rows[i].append(value)
            if stuck:
                break
        if not stuck:
            return rows


def _column_contents(rows):
    width = max(len(r) for r in rows)
    return [sorted(r[j] for r in rows if len(r) > j) for j in range(width)]


def test_sort_to_key_random():
    """测试13：200 个随机输入排序后都是 SSAF，基底与各列内容不变"""
    rng = random.Random(20240613)
    family = SSAFFamily(7, 7)
    for _ in range(200):
        rows = _random_sortable_rows(rng)
        T = sort_to_key(rows)
        assert family.is_member(T), f"{rows} 排序后不是 SSAF：{T.rows()}"
        assert list(T.basement) == [r[0] for r in rows]
        contents = _column_contents(rows)
        for j in range(1, len(contents)):
            assert sorted(T.column(j).values()) == contents[j], f"{rows} 第 {j} 列内容改变"


def _rearrangements(rows):
    """保持首列与行长不动、各列内部重新分配到各行，且仍行弱递减的全部输入"""
    columns = [[r[j] for r in rows if len(r) > j] for j in range(1, max(len(r) for r in rows))]
    for choice in product(*(permutations(c) for c in columns)):
        candidate = [[r[0]] for r in rows]
        for column in choice:
            for i, value in enumerate(column):
                candidate[i].append(value)
        if all(r[j] >= r[j + 1] for r in candidate for j in range(len(r) - 1)):
            yield candidate


def test_sort_to_key_ignores_column_order():
    """测试14：同一首列、同样的各列内容，不论各列内部如何分配，排序结果唯一"""
    rng = random.Random(20240614)
    for _ in range(30):
        rows = _random_sortable_rows(rng, max_height=3)
        results = {sort_to_key(candidate) for candidate in _rearrangements(rows)}
        assert results == {sort_to_key(rows)}, f"{rows} 的排序结果依赖列内顺序"


def test_key_tableaux_have_no_type_b_inversions():
    """测试15：分拆形状的 key 表中没有 B 型逆序三元组"""
    for n in (2, 3):
        for alpha in product(range(3), repeat=n):
            problem = generators.key_problem(alpha, n)
            for T in enumerate_fillings(problem.family, problem.diagram, problem.basement):
                assert [t for t in inversion_triples(T) if t[0] == 'B'] == [], f"α={alpha}：{T.rows()}"
                assert attacking_pairs(T) == []


def _statistic(T, n):
    return weight(T, n) + (dn(T), coinv(T))


def _with_multiplicities(T, ms):
    for j in range(len(ms), 0, -1):
        T = duplicate_column(T, j, ms[j - 1])
    return T


@pytest.mark.parametrize("alpha", [(1, 2), (2, 0, 1), (0, 2, 2)])
def test_affine_statistic_law(alpha):
    """测试16：(w, dn, coinv) 在列复制份数上是仿射的：用 m_i = 1, 2 拟合，在 m_i <= 3 上验证"""
    n = len(alpha)
    problem = generators.hl_E_problem(alpha, n)
    fillings = list(enumerate_fillings(problem.family, problem.diagram, problem.basement))
    assert fillings
    for T in fillings:
        length = T.num_columns
        base = _statistic(T, n)
        slopes = []
        for i in range(length):
            ms = [1] * length
            ms[i] = 2
            bumped = _statistic(_with_multiplicities(T, ms), n)
            slopes.append(tuple(b - a for a, b in zip(base, bumped)))
        constant = tuple(a - sum(s[c] for s in slopes) for c, a in enumerate(base))
        for ms in product(range(1, 4), repeat=length):
            expected = tuple(constant[c] + sum(m * s[c] for m, s in zip(ms, slopes))
                             for c in range(len(base)))
            assert _statistic(_with_multiplicities(T, ms), n) == expected, f"{T.rows()} 在 m={ms} 处不是仿射的"
