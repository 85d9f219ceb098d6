"""形状：组合、图、带基底的形状

坐标约定：格子 (i, j)，i 为行（自上而下，1 起），j 为列（1 起）；
第 0 列保留给增广填充的基底。
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from fillingrec.core.errors import ShapeError

Box = Tuple[int, int]
Composition = Tuple[int, ...]
ColumnShape = Tuple[int, ...]  # 列中出现的行号，升序


def as_composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ShapeError(f"组合的分量必须非负：{parts}")
    return parts


def is_partition(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def parse_composition(text: str) -> Composition:
    """'2,0,1' -> (2, 0, 1)；空串为空组合"""
    text = text.strip()
    if not text:
        return ()
    try:
        return as_composition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"无法解析组合 {text!r}") from exc


@dataclass(frozen=True)
class Diagram:
    """有限格子集合"""

    boxes: FrozenSet[Box]

    def __post_init__(self):
        for i, j in self.boxes:
            if i < 1 or j < 1:
                raise ShapeError(f"格子 {(i, j)} 越界（行列均从 1 开始）")

    @property
    def is_empty(self) -> bool:
        return not self.boxes

    @property
    def num_columns(self) -> int:
        return max((j for _, j in self.boxes), default=0)

    @property
    def num_rows(self) -> int:
        return max((i for i, _ in self.boxes), default=0)

    def column(self, j: int) -> ColumnShape:
        return tuple(sorted(i for i, c in self.boxes if c == j))

    def columns(self) -> List[ColumnShape]:
        return [self.column(j) for j in range(1, self.num_columns + 1)]

    def row_lengths(self) -> Dict[int, int]:
        lengths: Dict[int, int] = {}
        for i, _ in self.boxes:
            lengths[i] = lengths.get(i, 0) + 1
        return lengths

    def sorted_boxes(self) -> List[Box]:
        """列优先、列内自上而下"""
        return sorted(self.boxes, key=lambda b: (b[1], b[0]))


@dataclass(frozen=True)
class BasementShape:
    """带基底的形状 (β, λ)：β 各不相同，λ 与 β 等长"""

    basement: Tuple[int, ...]
    shape: Composition

    def __post_init__(self):
        if len(set(self.basement)) != len(self.basement):
            raise ShapeError(f"基底必须两两不同：{self.basement}")
        if any(b < 1 for b in self.basement):
            raise ShapeError(f"基底元素必须为正：{self.basement}")
        if len(self.shape) != len(self.basement):
            raise ShapeError(f"基底长度 {len(self.basement)} 与形状长度 {len(self.shape)} 不符")

    @property
    def diagram(self) -> Diagram:
        return diagram_from_composition(self.shape)


def diagram_from_composition(alpha: Sequence[int]) -> Diagram:
    """左对齐：第 i 行占第 1..α_i 列"""
    alpha = as_composition(alpha)
    return Diagram(frozenset((i, j) for i, a in enumerate(alpha, start=1) for j in range(1, a + 1)))


def skew_diagram(outer: Sequence[int], inner: Optional[Sequence[int]] = None) -> Diagram:
    """λ/μ：第 i 行占第 μ_i+1..λ_i 列；μ 补零到 λ 的长度"""
    outer = as_composition(outer)
    inner = as_composition(inner or ())
    if len(inner) > len(outer):
        raise ShapeError(f"内形状 {inner} 比外形状 {outer} 长")
    inner = inner + (0,) * (len(outer) - len(inner))
    if any(m > l for l, m in zip(outer, inner)):
        raise ShapeError(f"{inner} 不包含于 {outer}")
    return Diagram(frozenset(
        (i, j) for i, (l, m) in enumerate(zip(outer, inner), start=1) for j in range(m + 1, l + 1)))


def dilate(diagram: Diagram, k: int) -> Diagram:
    """kD：每列重复 k 次，k=0 为空图"""
    if k < 0:
        raise ShapeError(f"伸缩因子必须非负：{k}")
    return Diagram(frozenset(
        (i, k * j - k + r) for i, j in diagram.boxes for r in range(1, k + 1)))


def shape_data(alpha: Sequence[int], n: Optional[int] = None) -> BasementShape:
    """组合 α 对应的 key 形状数据 (β(α), λ(α))

    第 i 行的基底为 n+1-i；去掉 α_i = 0 的行后按 α_i 递减稳定排序。

    >>> shape_data((0, 2, 3, 4, 2, 0, 1))
    BasementShape(basement=(4, 5, 6, 3, 1), shape=(4, 3, 2, 2, 1))
    """
    alpha = as_composition(alpha)
    n = len(alpha) if n is None else n
    if n < len(alpha):
        raise ShapeError(f"变量个数 {n} 小于组合长度 {len(alpha)}")
    rows = [(n + 1 - i, a) for i, a in enumerate(alpha, start=1) if a > 0]
    rows.sort(key=lambda r: -r[1])
    return BasementShape(tuple(b for b, _ in rows), tuple(a for _, a in rows))


def column_decomposition(diagram: Diagram) -> List[Tuple[int, ColumnShape]]:
    """把相邻同形列合并为 (重数, 列形状) 块；空列也参与"""
    blocks: List[Tuple[int, ColumnShape]] = []
    for col in diagram.columns():
        if blocks and blocks[-1][1] == col:
            blocks[-1] = (blocks[-1][0] + 1, col)
        else:
            blocks.append((1, col))
    return blocks


def diagram_from_columns(blocks: Sequence[Tuple[int, ColumnShape]]) -> Diagram:
    """column_decomposition 的逆"""
    boxes = set()
    j = 0
    for mult, col in blocks:
        if mult < 1:
            raise ShapeError(f"块重数必须为正：{mult}")
        for _ in range(mult):
            j += 1
            boxes.update((i, j) for i in col)
    return Diagram(frozenset(boxes))


__all__ = [
    'Box', 'Composition', 'ColumnShape', 'Diagram', 'BasementShape',
    'as_composition', 'is_partition', 'parse_composition',
    'diagram_from_composition', 'skew_diagram', 'dilate', 'shape_data',
    'column_decomposition', 'diagram_from_columns',
]
