"""填充递推库：填充枚举与生成函数

两条独立路径计算同一个生成函数 Σ_T 权重(T)：

1. oracle：逐格回溯（列优先、列内自上而下），不做任何记忆化，
   对每张完整填充用整体统计量求权重。
2. transfer：把每一列的合法填充作为节点、相容的相邻列作为边，
   构成分层有向图（networkx.DiGraph），按拓扑序做路径加权求和。
   列填充与列对关系按基础图记忆化，所有伸缩 kD 共用。

所有约束都只涉及同一列或相邻两列，因此两条路径给出相同结果；
测试以 oracle 为准校验 transfer。

依赖:
    - core.families.FamilyBase
    - networkx（分层列转移图）

理论依据: 决策记录 002：列转移图
"""

import logging
import threading
from collections import defaultdict
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from fillingrec.core.errors import UsageError
from fillingrec.core.families.base import FamilyBase
from fillingrec.core.math.polynomial import MultivariatePolynomial
from fillingrec.models.fillings import AugmentedFilling, Entry
from fillingrec.models.shapes import ColumnShape, Diagram, column_decomposition, dilate

logger = logging.getLogger(__name__)

ColumnFilling = Tuple[Tuple[int, Entry], ...]


def _check_basement(family: FamilyBase, diagram: Diagram, basement: Optional[Sequence[int]]):
    if family.tag.augmented:
        if basement is None:
            raise UsageError(f"{family.name} 需要基底")
        if diagram.num_rows > len(basement):
            raise UsageError("图的行数超过基底长度")
    elif basement is not None:
        raise UsageError(f"{family.name} 不接受基底")


# ====================================================
# oracle：逐格回溯
# ====================================================

def enumerate_fillings(family: FamilyBase, diagram: Diagram,
                       basement: Optional[Sequence[int]] = None) -> Iterator[AugmentedFilling]:
    """按列优先读法的字典序逐个产出合法填充"""
    _check_basement(family, diagram, basement)
    basement = tuple(basement) if basement is not None else None
    lengths = diagram.row_lengths()
    boxes = diagram.sorted_boxes()
    columns: Dict[int, Dict[int, Entry]] = {}
    if basement is not None:
        columns[0] = {i: b for i, b in enumerate(basement, start=1)}
    placed: Dict[Tuple[int, int], Entry] = {}

    def extend(index: int) -> Iterator[AugmentedFilling]:
        if index == len(boxes):
            yield AugmentedFilling.from_cells(placed, basement)
            return
        i, j = boxes[index]
        column = columns.setdefault(j, {})
        left = columns.get(j - 1)
        for value in family.candidates(i):
            column[i] = value
            if family.column_ok(column) and (left is None or family.pair_ok(left, column, lengths)):
                placed[(i, j)] = value
                yield from extend(index + 1)
                del placed[(i, j)]
            del column[i]

    yield from extend(0)


def oracle_generating_function(family: FamilyBase, diagram: Diagram,
                               basement: Optional[Sequence[int]] = None) -> MultivariatePolynomial:
    total = MultivariatePolynomial.zero(family.num_vars)
    count = 0
    for filling in enumerate_fillings(family, diagram, basement):
        total = total + family.filling_weight(filling)
        count += 1
    logger.debug("%s oracle: %d fillings", family.name, count)
    return total


# ====================================================
# transfer：分层列转移图
# ====================================================

class TransferGraph:
    """某族在基础图 D 上的列转移结构，供所有 kD 复用

    参数
    ----------
    family : FamilyBase
        填充族实例
    diagram : Diagram
        基础图 D
    basement : Sequence[int], optional
        增广族的基底

    属性
    ----------
    row_lengths : Dict[int, int]
        D 的行长；kD 的行长是其 k 倍，三元组条件只比较行长大小，故可共用
    """

    def __init__(self, family: FamilyBase, diagram: Diagram,
                 basement: Optional[Sequence[int]] = None):
        _check_basement(family, diagram, basement)
        self.family = family
        self.diagram = diagram
        self.basement = tuple(basement) if basement is not None else None
        self.row_lengths = diagram.row_lengths()
        self._columns: Dict[ColumnShape, List[ColumnFilling]] = {}
        self._pairs: Dict[Tuple[ColumnFilling, ColumnFilling, bool], Optional[MultivariatePolynomial]] = {}
        self._lock = threading.Lock()

    @property
    def source(self) -> ColumnFilling:
        if self.basement is None:
            return ()
        return tuple((i, b) for i, b in enumerate(self.basement, start=1))

    def column_fillings(self, shape: ColumnShape) -> List[ColumnFilling]:
        """形状为 shape 的全部合法列填充（列内约束）"""
        cached = self._columns.get(shape)
        if cached is not None:
            return cached
        found: List[ColumnFilling] = []
        column: Dict[int, Entry] = {}

        def extend(index: int):
            if index == len(shape):
                found.append(tuple((i, column[i]) for i in shape))
                return
            row = shape[index]
            for value in self.family.candidates(row):
                column[row] = value
                if self.family.column_ok(column):
                    extend(index + 1)
                del column[row]

        extend(0)
        with self._lock:
            self._columns[shape] = found
        return found

    def pair(self, left: ColumnFilling, right: ColumnFilling,
             left_is_basement: bool = False) -> Optional[MultivariatePolynomial]:
        """相容时返回列对权重，否则 None"""
        key = (left, right, left_is_basement)
        if key in self._pairs:
            return self._pairs[key]
        left_map, right_map = dict(left), dict(right)
        result = None
        if self.family.pair_ok(left_map, right_map, self.row_lengths):
            result = self.family.pair_weight(left_map, right_map, self.row_lengths, left_is_basement)
        with self._lock:
            self._pairs[key] = result
        return result

    def build_graph(self, k: int) -> nx.DiGraph:
        """kD 的分层图；节点 (列号, 列填充)，节点与边都带 weight"""
        graph = nx.DiGraph()
        source = (0, self.source)
        graph.add_node(source, weight=MultivariatePolynomial.one(self.family.num_vars))
        layer = [source]
        shapes = dilate(self.diagram, k).columns()
        for j, shape in enumerate(shapes, start=1):
            next_layer = []
            for col in self.column_fillings(shape):
                node = (j, col)
                for prev in layer:
                    w = self.pair(prev[1], col, left_is_basement=(j == 1 and self.basement is not None))
                    if w is None:
                        continue
                    if node not in graph:
                        graph.add_node(node, weight=self.family.column_weight(dict(col)))
                    graph.add_edge(prev, node, weight=w)
                if node in graph:
                    next_layer.append(node)
            layer = next_layer
            if not layer:
                break
        graph.graph['num_columns'] = len(shapes)
        return graph

    def generating_function(self, k: int = 1) -> MultivariatePolynomial:
        n = self.family.num_vars
        graph = self.build_graph(k)
        last = graph.graph['num_columns']
        acc: Dict[Tuple, MultivariatePolynomial] = {}
        for node in nx.topological_sort(graph):
            preds = list(graph.predecessors(node))
            if not preds:
                incoming = MultivariatePolynomial.one(n)
            else:
                incoming = MultivariatePolynomial.zero(n)
                for p in preds:
                    incoming = incoming + acc[p] * graph.edges[p, node]['weight']
            acc[node] = graph.nodes[node]['weight'] * incoming
        total = MultivariatePolynomial.zero(n)
        for node, value in acc.items():
            if node[0] == last:
                total = total + value
        logger.debug("%s transfer k=%d: %d nodes, %d edges",
                     self.family.name, k, graph.number_of_nodes(), graph.number_of_edges())
        return total

    def collapsed_root_exponents(self) -> Set[Tuple[int, ...]]:
        """折叠列填充的权重指数集合

        对 D 的列分解 (α_1 s_1, ..., α_m s_m)，在每个块中选一个可自我相邻的
        列填充 C_i，要求存在一条穿过各块、经过 C_i 的相容列序列；
        返回 Σ α_i · exps(C_i) 的全体。
        """
        zero = (0,) * self.family.num_vars
        states: Dict[ColumnFilling, Set[Tuple[int, ...]]] = {self.source: {zero}}
        for index, (mult, shape) in enumerate(column_decomposition(self.diagram)):
            fillings = self.column_fillings(shape)
            block = nx.DiGraph()
            block.add_nodes_from(fillings)
            block.add_edges_from((c, d) for c in fillings for d in fillings
                                 if self.pair(c, d) is not None)
            reach = {c: {c} | nx.descendants(block, c) for c in fillings}
            new_states: Dict[ColumnFilling, Set[Tuple[int, ...]]] = defaultdict(set)
            from_basement = index == 0 and self.basement is not None
            for prev, sums in states.items():
                for entry in fillings:
                    if self.pair(prev, entry, left_is_basement=from_basement) is None:
                        continue
                    for chosen in reach[entry]:
                        if not block.has_edge(chosen, chosen):
                            continue
                        exps = self.family.column_exponents(dict(chosen))
                        shifted = {tuple(s + mult * e for s, e in zip(total, exps)) for total in sums}
                        for exit_col in reach[chosen]:
                            new_states[exit_col] |= shifted
            states = new_states
        roots: Set[Tuple[int, ...]] = set()
        for sums in states.values():
            roots |= sums
        return roots


def generating_function(family: FamilyBase, diagram: Diagram,
                        basement: Optional[Sequence[int]] = None,
                        strategy: Optional[str] = None) -> MultivariatePolynomial:
    """按配置的策略计算生成函数"""
    strategy = strategy or family.settings.strategy
    if strategy == 'oracle':
        return oracle_generating_function(family, diagram, basement)
    if strategy == 'transfer':
        return TransferGraph(family, diagram, basement).generating_function(1)
    raise UsageError(f"未知枚举策略：{strategy}")


__all__ = [
    'ColumnFilling', 'enumerate_fillings', 'oracle_generating_function',
    'TransferGraph', 'generating_function',
]
