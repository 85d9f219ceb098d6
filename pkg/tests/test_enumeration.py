import pytest

from fillingrec.core import generators
from fillingrec.core.enumeration import TransferGraph, enumerate_fillings, generating_function
from fillingrec.core.errors import UsageError
from fillingrec.core.families import (
    FlaggedFamily,
    RPPFamily,
    SetValuedFamily,
    SSAFFamily,
    SSYTFamily,
    make_family,
)
from fillingrec.models.enums import FillingFamily
from fillingrec.models.fillings import AugmentedFilling
from fillingrec.models.shapes import Diagram, diagram_from_composition


def _problems():
    return [
        generators.schur_problem((2, 1), 3),
        generators.schur_problem((2, 2), 3, inner=(1,)),
        generators.flagged_schur_problem((2, 1), (1, 2), (2, 3), 3),
        generators.atom_problem((1, 3, 2), (0, 1, 2), 3),
        generators.key_problem((0, 2, 1), 3),
        generators.hl_E_problem((0, 2, 1), 3),
        generators.symplectic_problem((1, 1), 2),
        generators.grothendieck_problem((2, 1), 2),
        generators.dual_grothendieck_problem((2, 1), 2),
    ]


def test_small_counts():
    """测试1：小例子的填充个数"""
    ssaf = list(enumerate_fillings(SSAFFamily(1, 1), diagram_from_composition((1,)), (1,)))
    assert ssaf == [AugmentedFilling.from_cells({(1, 1): 1}, (1,))]
    ssyt = list(enumerate_fillings(SSYTFamily(2, 2), diagram_from_composition((2, 1))))
    assert len(ssyt) == 2, "s_(2,1)(1,1) = 2"


def test_empty_shape_has_one_filling():
    """测试2：空形状恰有一个空填充，生成函数为 1"""
    empty = Diagram(frozenset())
    for family in (SSYTFamily(2, 2), RPPFamily(2, 2), SetValuedFamily(2, 2)):
        assert len(list(enumerate_fillings(family, empty))) == 1
        assert TransferGraph(family, empty).generating_function(1) == 1
    assert len(list(enumerate_fillings(SSAFFamily(2, 2), empty, (1, 2)))) == 1


def test_enumerated_fillings_are_members():
    """测试3：枚举出的每个填充都通过成员判定"""
    for problem in _problems():
        family = problem.family
        for filling in enumerate_fillings(family, problem.diagram, problem.basement):
            assert family.is_member(filling), f"{family.name} 枚举出非成员 {filling}"


def test_membership_rejections():
    """测试4：列不严格的表不是 SSYT；旗标越界被拒绝"""
    ssyt = SSYTFamily(2, 2)
    assert ssyt.is_member(AugmentedFilling.from_rows([[1, 1], [2]]))
    assert not ssyt.is_member(AugmentedFilling.from_rows([[1, 2], [1]]))
    flagged = FlaggedFamily(3, (2, 2), (2, 3), 3)
    assert not flagged.is_member(AugmentedFilling.from_rows([[1], [3]]))
    assert flagged.is_member(AugmentedFilling.from_rows([[2], [3]]))


def test_oracle_matches_transfer():
    """测试5：逐格回溯与列转移图给出同一生成函数（k = 1, 2）"""
    for problem in _problems():
        for k in (1, 2):
            oracle = problem.generating_function('oracle', k)
            transfer = problem.generating_function('transfer', k)
            assert oracle == transfer, f"{problem.family.name} 在 k={k} 时两条路径不一致"


def test_transfer_graph_is_reused_across_dilations():
    """测试6：同一张转移图的列填充缓存在各个 k 之间复用"""
    problem = generators.key_problem((1, 0, 2), 3)
    graph = TransferGraph(problem.family, problem.diagram, problem.basement)
    first = graph.generating_function(1)
    cached = dict(graph._columns)
    graph.generating_function(3)
    assert set(cached) == set(graph._columns), "伸缩不应产生新的列形状"
    assert first == generators.key_polynomial((1, 0, 2), 3)


def test_basement_rules():
    """测试7：增广族必须带基底，其余族不接受基底"""
    D = diagram_from_composition((1,))
    with pytest.raises(UsageError):
        list(enumerate_fillings(SSAFFamily(2, 2), D))
    with pytest.raises(UsageError):
        list(enumerate_fillings(SSYTFamily(2, 2), D, (1,)))
    with pytest.raises(UsageError):
        generating_function(SSYTFamily(2, 2), D, strategy='greedy')


def test_make_family():
    """测试8：按族标签构造"""
    assert isinstance(make_family(FillingFamily.SSYT, 3), SSYTFamily)
    flagged = make_family(FillingFamily.FLAGGED, 3, flags_a=(1, 2), flags_b=(2, 3))
    assert (flagged.tag, flagged.flags_a, flagged.flags_b) == (FillingFamily.FLAGGED, (1, 2), (2, 3))
    assert make_family(FillingFamily.SSAF, 2, alphabet=4).alphabet == 4
