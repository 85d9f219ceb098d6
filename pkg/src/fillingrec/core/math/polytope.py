"""填充递推库：格多面体与整点变换

本模块定义 HPolytope（A·x <= b 加整数包围盒），提供：
- kP 的格点枚举（numpy 向量化筛选，按第一坐标分片，可并行）
- 整点变换 σ_S(z) = Σ_{x∈S} z^x
- IDP 多面体的递推检验与分解检验
- 多个面的并的整点变换（对交集做容斥，交集由不等式组拼接得到）

依赖:
    - numpy（批量检验 A·x <= k·b）
    - core.math.polynomial, core.math.recurrence
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from fillingrec.core.errors import InconsistencyError, ShapeError, UsageError, WindowTooShortError
from fillingrec.core.math.polynomial import MultivariatePolynomial
from fillingrec.core.math.recurrence import CharPoly, annihilation_residuals
from fillingrec.core.settings import get_settings

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


@dataclass(frozen=True)
class HPolytope:
    """{x ∈ Z^d : A x <= b}，box 为 P 的整数包围盒 [(lo, hi), ...]

    A、b 为整数；kP 的格点在 k·box 中搜索。
    """

    A: Tuple[Tuple[int, ...], ...]
    b: Tuple[int, ...]
    box: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if len(self.A) != len(self.b):
            raise ShapeError("A 的行数与 b 的长度不一致")
        if any(len(row) != self.dim for row in self.A):
            raise ShapeError("A 的列数与维数不一致")
        if any(lo > hi for lo, hi in self.box):
            raise ShapeError(f"包围盒不合法：{self.box}")

    @classmethod
    def create(cls, A, b, box) -> 'HPolytope':
        return cls(tuple(tuple(int(v) for v in row) for row in A),
                   tuple(int(v) for v in b),
                   tuple((int(lo), int(hi)) for lo, hi in box))

    @property
    def dim(self) -> int:
        return len(self.box)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.A, dtype=np.int64).reshape(len(self.A), self.dim)

    @property
    def rhs(self) -> np.ndarray:
        return np.array(self.b, dtype=np.int64)

    def contains(self, points: np.ndarray, k: int = 1) -> np.ndarray:
        """逐行判断 points 是否满足 A x <= k b"""
        if not len(self.A):
            return np.ones(len(points), dtype=bool)
        return np.all(points @ self.matrix.T <= k * self.rhs, axis=1)

    def intersect(self, other: 'HPolytope') -> 'HPolytope':
        """不等式组拼接，包围盒取交"""
        if self.dim != other.dim:
            raise ShapeError("两个多面体维数不同")
        box = tuple((max(a[0], b[0]), min(a[1], b[1])) for a, b in zip(self.box, other.box))
        A = np.vstack([self.matrix, other.matrix])
        b = np.hstack([self.rhs, other.rhs])
        if any(lo > hi for lo, hi in box):
            # 包围盒不相交：用一条不可满足的不等式表示空集
            A = np.vstack([A, np.zeros((1, self.dim), dtype=np.int64)])
            b = np.hstack([b, [-1]])
            box = tuple((lo, lo) for lo, _ in self.box)
        return HPolytope.create(A.tolist(), b.tolist(), box)


def _slab_points(polytope: HPolytope, k: int, first: int) -> np.ndarray:
    ranges = [np.arange(k * lo, k * hi + 1) for lo, hi in polytope.box[1:]]
    if ranges:
        grids = np.meshgrid(*ranges, indexing='ij')
        rest = np.stack([g.ravel() for g in grids], axis=1)
    else:
        rest = np.zeros((1, 0), dtype=np.int64)
    slab = np.hstack([np.full((len(rest), 1), first, dtype=np.int64), rest.astype(np.int64)])
    return slab[polytope.contains(slab, k)]


def _raw_points(polytope: HPolytope, k: int) -> List[Point]:
    if polytope.dim == 0:
        return [()] if polytope.contains(np.zeros((1, 0), dtype=np.int64), k).all() else []
    lo, hi = polytope.box[0]
    firsts = list(range(k * lo, k * hi + 1))
    threads = get_settings().threads
    if threads > 1 and len(firsts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            slabs = list(pool.map(lambda f: _slab_points(polytope, k, f), firsts))
    else:
        slabs = [_slab_points(polytope, k, f) for f in firsts]
    points = {tuple(int(v) for v in row) for slab in slabs for row in slab}
    return sorted(points)


def verify_box(polytope: HPolytope) -> None:
    """k=1 时若某个边界格点向盒外再走一步仍满足不等式，说明包围盒截断了 P"""
    points = _raw_points(polytope, 1)
    if not points:
        return
    arr = np.array(points, dtype=np.int64)
    for axis, (lo, hi) in enumerate(polytope.box):
        for edge, step in ((lo, -1), (hi, 1)):
            on_edge = arr[arr[:, axis] == edge]
            if not len(on_edge):
                continue
            outside = on_edge.copy()
            outside[:, axis] += step
            if polytope.contains(outside).any():
                raise UsageError(f"包围盒在第 {axis + 1} 个坐标方向截断了多面体")


def lattice_points(polytope: HPolytope, k: int = 1) -> List[Point]:
    """kP ∩ Z^d，按字典序；k=0 时非空 P 给出 {原点}"""
    if k < 0:
        raise UsageError(f"伸缩因子必须非负：{k}")
    if get_settings().get('polytope', 'verify_box', True):
        verify_box(polytope)
    if k == 0:
        return [(0,) * polytope.dim] if _raw_points(polytope, 1) else []
    return _raw_points(polytope, k)


def integer_point_transform(points: Sequence[Point], dim: int) -> MultivariatePolynomial:
    """σ_S(z) = Σ_{x∈S} z^x（z_i 即 x_i，允许负指数）"""
    total = MultivariatePolynomial.zero(dim)
    for point in set(points):
        total = total + MultivariatePolynomial.monomial(point, num_vars=dim)
    return total


def transform_window(polytope: HPolytope, kmax: int) -> List[MultivariatePolynomial]:
    return [integer_point_transform(lattice_points(polytope, k), polytope.dim) for k in range(kmax + 1)]


@dataclass
class IDPReport:
    """IDP 递推检验结果"""
    passed: bool
    order: int
    kmax: int
    failing_index: Optional[int]
    char_poly: CharPoly


def idp_char_poly(polytope: HPolytope) -> CharPoly:
    roots = [MultivariatePolynomial.monomial(p, num_vars=polytope.dim) for p in lattice_points(polytope, 1)]
    return CharPoly.from_roots(roots, polytope.dim)


def idp_recurrence_check(polytope: HPolytope, kmax: int) -> IDPReport:
    """{σ_{kP}}_{k=0..kmax} 是否被 Π_{p∈P∩Z^d}(t - z^p) 零化"""
    chi = idp_char_poly(polytope)
    if kmax < chi.degree:
        raise WindowTooShortError(f"检验阶为 {chi.degree}，kmax 至少为 {chi.degree}，收到 {kmax}")
    residuals = annihilation_residuals(chi, transform_window(polytope, kmax))
    failing = next((chi.degree + i for i, r in enumerate(residuals) if not r.is_zero), None)
    return IDPReport(failing is None, chi.degree, kmax, failing, chi)


def idp_decomposition_check(polytope: HPolytope, max_k: Optional[int] = None) -> bool:
    """k = 2..max_k 时 kP 的每个格点都能写成 (k-1)P 的格点加 P 的格点"""
    max_k = max_k or get_settings().get('polytope', 'idp_check_max_k', 3)
    base = lattice_points(polytope, 1)
    previous = set(lattice_points(polytope, 1))
    for k in range(2, max_k + 1):
        sums = {tuple(a + b for a, b in zip(p, q)) for p in previous for q in base}
        current = set(lattice_points(polytope, k))
        if not current <= sums:
            logger.info("IDP decomposition fails at k=%d", k)
            return False
        previous = current
    return True


def _union_points(faces: Sequence[HPolytope], k: int) -> Set[Point]:
    points: Set[Point] = set()
    for face in faces:
        points.update(lattice_points(face, k))
    return points


def faces_union_transform(faces: Sequence[HPolytope], k: int) -> MultivariatePolynomial:
    """σ_{k(F_1 ∪ ... ∪ F_m)}，按容斥 Σ_S (-1)^{|S|+1} σ_{k ∩_{i∈S} F_i} 计算

    k >= 1 时与直接求并集一致；k = 0 时每个非空交集贡献一次原点。
    """
    if not faces:
        raise UsageError("至少需要一个面")
    dim = faces[0].dim
    if any(f.dim != dim for f in faces):
        raise ShapeError("各个面的维数必须一致")
    total = MultivariatePolynomial.zero(dim)
    for size in range(1, len(faces) + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(faces, size):
            inter = subset[0]
            for face in subset[1:]:
                inter = inter.intersect(face)
            total = total + sign * integer_point_transform(lattice_points(inter, k), dim)
    if k >= 1:
        direct = integer_point_transform(sorted(_union_points(faces, k)), dim)
        if direct != total:
            raise InconsistencyError(f"k={k} 时容斥结果与直接并集不一致")
    return total


def faces_union_window(faces: Sequence[HPolytope], kmax: int) -> List[MultivariatePolynomial]:
    return [faces_union_transform(faces, k) for k in range(kmax + 1)]


def faces_union_char_poly(faces: Sequence[HPolytope]) -> CharPoly:
    """Π_{p ∈ ∪F ∩ Z^d} (t - z^p)"""
    dim = faces[0].dim
    roots = [MultivariatePolynomial.monomial(p, num_vars=dim) for p in sorted(_union_points(faces, 1))]
    return CharPoly.from_roots(roots, dim)


def bruteforce_lattice_points(polytope: HPolytope, k: int = 1) -> List[Point]:
    """逐点检验包围盒内全部整点（不分片、不向量化）"""
    ranges = [range(k * lo, k * hi + 1) for lo, hi in polytope.box]
    found = []
    for point in product(*ranges):
        if all(sum(a * x for a, x in zip(row, point)) <= k * b for row, b in zip(polytope.A, polytope.b)):
            found.append(tuple(point))
    return sorted(found)


__all__ = [
    'Point', 'HPolytope', 'lattice_points', 'verify_box', 'integer_point_transform',
    'transform_window', 'IDPReport', 'idp_char_poly', 'idp_recurrence_check',
    'idp_decomposition_check', 'faces_union_transform', 'faces_union_window',
    'faces_union_char_poly', 'bruteforce_lattice_points',
]
