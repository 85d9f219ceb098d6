"""填充：带可选基底的格子赋值，以及其上的统计量与列手术

本模块提供：
- AugmentedFilling 值类型（不可变，格子按列优先规范排序）
- 统计量：weight、ev、coinv、dn、三元组与攻击对
- 列手术：删除列、复制列
- 列排序引理：把行弱递减、列互异的填充排成 key 表

基底放在第 0 列；行长度只计非基底格子。

依赖:
    - models.shapes
    - core.settings（dn 是否计入基底）
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from fillingrec.core.errors import NotSortableError, ShapeError
from fillingrec.core.settings import get_settings
from fillingrec.models.shapes import Box, Diagram

Entry = Union[int, Tuple[int, ...]]
Triple = Tuple[str, Box, Box, Box]


def _sort_cells(cells: Iterable[Tuple[Box, Entry]]) -> Tuple[Tuple[Box, Entry], ...]:
    return tuple(sorted(cells, key=lambda item: (item[0][1], item[0][0])))


@dataclass(frozen=True)
class AugmentedFilling:
    """格子到元素的映射，可带基底

    属性
    ----------
    cells : Tuple[Tuple[Box, Entry], ...]
        列优先排序的 ((行, 列), 元素)；列号从 1 开始
    basement : Tuple[int, ...], optional
        第 i 行的基底 β_i，覆盖第 1..len(β) 行（含空行）
    """

    cells: Tuple[Tuple[Box, Entry], ...]
    basement: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        boxes = [b for b, _ in self.cells]
        if len(set(boxes)) != len(boxes):
            raise ShapeError("同一格子出现两次")
        if any(j < 1 or i < 1 for i, j in boxes):
            raise ShapeError("填充格子的行列都从 1 开始（第 0 列是基底）")
        if self.basement is not None:
            if len(set(self.basement)) != len(self.basement):
                raise ShapeError(f"基底必须两两不同：{self.basement}")
            if any(i > len(self.basement) for i, _ in boxes):
                raise ShapeError("有格子所在行没有基底")

    # ---------- 构造 ----------
    @classmethod
    def from_cells(cls, cells: Mapping[Box, Entry],
                   basement: Optional[Sequence[int]] = None) -> 'AugmentedFilling':
        return cls(_sort_cells(cells.items()),
                   tuple(basement) if basement is not None else None)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]],
                  basement: Optional[Sequence[int]] = None,
                  offsets: Optional[Sequence[int]] = None) -> 'AugmentedFilling':
        """按行给出；第 i 行从第 offsets[i]+1 列开始（缺省 0）"""
        offsets = list(offsets or [0] * len(rows))
        cells = {}
        for i, row in enumerate(rows, start=1):
            for j, value in enumerate(row, start=offsets[i - 1] + 1):
                cells[(i, j)] = value
        return cls.from_cells(cells, basement)

    # ---------- 查询 ----------
    def as_dict(self) -> Dict[Box, Entry]:
        return dict(self.cells)

    def all_cells(self) -> Dict[Box, Entry]:
        """含基底（第 0 列）的全部格子"""
        cells = self.as_dict()
        if self.basement is not None:
            for i, b in enumerate(self.basement, start=1):
                cells[(i, 0)] = b
        return cells

    @property
    def diagram(self) -> Diagram:
        return Diagram(frozenset(b for b, _ in self.cells))

    @property
    def num_columns(self) -> int:
        return max((j for (_, j), _ in self.cells), default=0)

    def column(self, j: int) -> Dict[int, Entry]:
        """第 j 列的 行 -> 元素；j=0 为基底"""
        if j == 0:
            if self.basement is None:
                return {}
            return {i: b for i, b in enumerate(self.basement, start=1)}
        return {i: v for (i, c), v in self.cells if c == j}

    def columns(self) -> List[Dict[int, Entry]]:
        return [self.column(j) for j in range(1, self.num_columns + 1)]

    def rows(self) -> Dict[int, List[Entry]]:
        rows: Dict[int, List[Entry]] = {}
        for (i, j), v in sorted(self.cells):
            rows.setdefault(i, []).append(v)
        return rows

    def skew_shape(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """(α', β')：第 i 行占第 β'_i+1..α'_i 列；要求每行连续"""
        height = max(len(self.basement or ()), self.diagram.num_rows)
        outer, inner = [], []
        for i in range(1, height + 1):
            cols = sorted(j for (r, j), _ in self.cells if r == i)
            if not cols:
                outer.append(0)
                inner.append(0)
                continue
            if cols != list(range(cols[0], cols[-1] + 1)):
                raise ShapeError(f"第 {i} 行不连续，不是斜形状")
            outer.append(cols[-1])
            inner.append(cols[0] - 1)
        return tuple(outer), tuple(inner)


# ====================================================
# 统计量
# ====================================================

def _indices(value: Entry) -> Tuple[int, ...]:
    return value if isinstance(value, tuple) else (value,)


def weight(filling: AugmentedFilling, n: Optional[int] = None) -> Tuple[int, ...]:
    """x 指数向量：i 出现的次数（集合元素按成员计数），不计基底"""
    values = [i for _, v in filling.cells for i in _indices(v)]
    n = max(values, default=0) if n is None else n
    counts = [0] * n
    for i in values:
        if not 1 <= i <= n:
            raise ShapeError(f"元素 {i} 超出字母表 [1, {n}]")
        counts[i - 1] += 1
    return tuple(counts)


def ev(filling: AugmentedFilling, n: Optional[int] = None) -> Tuple[int, ...]:
    """含 i 的列数"""
    n = max((v for _, v in filling.cells), default=0) if n is None else n
    counts = [0] * n
    for column in filling.columns():
        for i in set(column.values()):
            counts[i - 1] += 1
    return tuple(counts)


def triple_configurations(filling: AugmentedFilling) -> List[Triple]:
    """全部三元组位置 (类型, a, b, c)

    a, b 在同一行相邻（a 在左，可以是基底）。
    A 型：c 在 b 的正下方同列，且 a、b 所在行不短于 c 所在行；
    B 型：c 在 a 的正上方同列，且 a、b 所在行严格长于 c 所在行。
    """
    cells = filling.all_cells()
    lengths = filling.diagram.row_lengths()
    triples: List[Triple] = []
    for (i, j) in sorted(cells, key=lambda b: (b[1], b[0])):
        b = (i, j + 1)
        if b not in cells:
            continue
        for (i2, j2) in sorted(cells, key=lambda c: (c[1], c[0])):
            if j2 == j + 1 and i2 > i and lengths.get(i, 0) >= lengths.get(i2, 0):
                triples.append(('A', (i, j), b, (i2, j2)))
            elif j2 == j and i2 < i and lengths.get(i, 0) > lengths.get(i2, 0):
                triples.append(('B', (i, j), b, (i2, j2)))
    return triples


def inversion_triples(filling: AugmentedFilling) -> List[Triple]:
    """满足 T(a) >= T(c) >= T(b) 的三元组；SSAF 中不允许出现"""
    cells = filling.all_cells()
    return [t for t in triple_configurations(filling)
            if cells[t[1]] >= cells[t[3]] >= cells[t[2]]]


def coinv(filling: AugmentedFilling) -> int:
    """三元组中满足 T(a) >= T(c) >= T(b) 的个数（hl_E 的 t 指数）"""
    return len(inversion_triples(filling))


def dn(filling: AugmentedFilling, include_basement: Optional[bool] = None) -> int:
    """行内相邻且不等的格子对数"""
    if include_basement is None:
        include_basement = get_settings().dn_includes_basement
    cells = filling.all_cells()
    count = 0
    for (i, j), v in cells.items():
        if j == 0 and not include_basement:
            continue
        right = cells.get((i, j + 1))
        if right is not None and right != v:
            count += 1
    return count


def attacking_pairs(filling: AugmentedFilling) -> List[Tuple[Box, Box]]:
    """相等且互相攻击的格子对：同列，或相邻两列中右侧格子严格靠下"""
    cells = filling.all_cells()
    boxes = sorted(cells, key=lambda b: (b[1], b[0]))
    pairs = []
    for p in boxes:
        for q in boxes:
            if p >= q or cells[p] != cells[q]:
                continue
            (i1, j1), (i2, j2) = p, q
            if j1 == j2:
                pairs.append((p, q))
            elif abs(j1 - j2) == 1:
                left, right = (p, q) if j1 < j2 else (q, p)
                if right[0] > left[0]:
                    pairs.append((left, right))
    return sorted(set(pairs))


# ====================================================
# 列手术
# ====================================================

def delete_column(filling: AugmentedFilling, j: int) -> AugmentedFilling:
    """删除第 j 列，右侧各列左移一格"""
    if not 1 <= j <= filling.num_columns:
        raise ShapeError(f"列 {j} 不存在")
    cells = {}
    for (i, c), v in filling.cells:
        if c < j:
            cells[(i, c)] = v
        elif c > j:
            cells[(i, c - 1)] = v
    return AugmentedFilling.from_cells(cells, filling.basement)


def duplicate_column(filling: AugmentedFilling, j: int, m: int) -> AugmentedFilling:
    """第 j 列重复为 m 份（m=1 不变），右侧各列右移 m-1 格"""
    if not 1 <= j <= filling.num_columns:
        raise ShapeError(f"列 {j} 不存在")
    if m < 1:
        raise ShapeError(f"复制份数必须为正：{m}")
    cells = {}
    for (i, c), v in filling.cells:
        if c < j:
            cells[(i, c)] = v
        elif c == j:
            for r in range(m):
                cells[(i, j + r)] = v
        else:
            cells[(i, c + m - 1)] = v
    return AugmentedFilling.from_cells(cells, filling.basement)


# ====================================================
# 列排序
# ====================================================

def sort_to_key(rows: Sequence[Sequence[int]]) -> AugmentedFilling:
    """把首列为基底 β 的行弱递减、列互异填充排成 key 表

    逐对相邻列处理：对第 j 列第 i 行的元素 h，在第 j+1 列第 i..末行中
    取不超过 h 的最大元素换到第 i 行，并让该行右侧整段随之移动。
    短行用 -i 补齐，排序后去掉。
    """
    if not rows or any(not r for r in rows):
        raise NotSortableError("每行至少要有基底元素")
    lengths = [len(r) for r in rows]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        raise NotSortableError(f"行长 {lengths} 不是分拆")
    for r in rows:
        if any(r[j] < r[j + 1] for j in range(len(r) - 1)):
            raise NotSortableError(f"行 {list(r)} 不是弱递减")
    width = max(lengths)
    for j in range(width):
        column = [r[j] for r in rows if len(r) > j]
        if len(set(column)) != len(column):
            raise NotSortableError(f"第 {j} 列元素不互异")
    if any(r[0] < 1 for r in rows):
        raise NotSortableError("基底元素必须为正")

    height = len(rows)
    grid = [list(r) + [-(i + 1)] * (width - len(r)) for i, r in enumerate(rows)]
    for j in range(width - 1):
        for i in range(height):
            head = grid[i][j]
            candidates = [(grid[r][j + 1], r) for r in range(i, height) if grid[r][j + 1] <= head]
            if not candidates:
                raise NotSortableError(f"第 {j + 1} 列第 {i + 1} 行找不到不超过 {head} 的元素")
            _, r = max(candidates)
            if r != i:
                grid[i][j + 1:], grid[r][j + 1:] = grid[r][j + 1:], grid[i][j + 1:]

    basement = tuple(g[0] for g in grid)
    body = []
    for g in grid:
        tail = g[1:]
        kept = [v for v in tail if v > 0]
        if tail[:len(kept)] != kept:
            raise NotSortableError("排序后补位元素没有落在行尾")
        body.append(kept)
    return AugmentedFilling.from_rows(body, basement)


__all__ = [
    'Entry', 'AugmentedFilling',
    'weight', 'ev', 'triple_configurations', 'inversion_triples', 'coinv', 'dn',
    'attacking_pairs',
    'delete_column', 'duplicate_column', 'sort_to_key',
]
