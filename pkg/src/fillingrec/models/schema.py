"""输入输出模式（pydantic）

多项式、特征多项式、多面体、填充与族请求的 JSON 表示。
输出用 model_dump_json，单项式按规范序排列，同一对象总是得到相同字节。
"""

from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from fillingrec.core.math.polynomial import MultivariatePolynomial
from fillingrec.core.math.polytope import HPolytope
from fillingrec.core.math.recurrence import CharPoly
from fillingrec.models.enums import PolynomialFamily
from fillingrec.models.fillings import AugmentedFilling


class TermModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    coeff: int
    x: List[int]
    t: int = Field(default=0, ge=0)


class PolynomialModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    num_vars: int = Field(ge=0)
    terms: List[TermModel] = Field(default_factory=list)

    @model_validator(mode='after')
    def _check_scope(self):
        for term in self.terms:
            if len(term.x) != self.num_vars:
                raise ValueError(f"单项式 x 指数长度 {len(term.x)} 与 num_vars={self.num_vars} 不符")
        return self

    @classmethod
    def from_polynomial(cls, p: MultivariatePolynomial) -> 'PolynomialModel':
        return cls(num_vars=p.num_vars,
                   terms=[TermModel(coeff=c, x=list(m[:-1]), t=m[-1]) for m, c in p.items()])

    def to_polynomial(self) -> MultivariatePolynomial:
        terms = {}
        for term in self.terms:
            mono = tuple(term.x) + (term.t,)
            terms[mono] = terms.get(mono, 0) + term.coeff
        return MultivariatePolynomial(self.num_vars, terms)


class RootModel(BaseModel):
    root: PolynomialModel
    multiplicity: int = Field(ge=1)


class CharPolyModel(BaseModel):
    num_vars: int = Field(ge=0)
    degree: int = Field(ge=0)
    roots: List[RootModel]

    @classmethod
    def from_char_poly(cls, chi: CharPoly) -> 'CharPolyModel':
        return cls(num_vars=chi.num_vars, degree=chi.degree,
                   roots=[RootModel(root=PolynomialModel.from_polynomial(r), multiplicity=m)
                          for r, m in chi.roots])

    def to_char_poly(self) -> CharPoly:
        return CharPoly.from_roots([(r.root.to_polynomial(), r.multiplicity) for r in self.roots],
                                   self.num_vars)


class HPolytopeModel(BaseModel):
    A: List[List[int]]
    b: List[int]
    box: List[Tuple[int, int]]

    @model_validator(mode='after')
    def _check_shape(self):
        if len(self.A) != len(self.b):
            raise ValueError("A 的行数与 b 的长度不一致")
        if any(len(row) != len(self.box) for row in self.A):
            raise ValueError("A 的列数与包围盒维数不一致")
        return self

    def to_polytope(self) -> HPolytope:
        return HPolytope.create(self.A, self.b, self.box)


class PolytopeRequest(BaseModel):
    """CLI polytope 子命令的输入文件：单个多面体或若干个面"""
    polytope: Optional[HPolytopeModel] = None
    faces: Optional[List[HPolytopeModel]] = None

    @model_validator(mode='after')
    def _exactly_one(self):
        if (self.polytope is None) == (self.faces is None):
            raise ValueError("polytope 与 faces 必须恰好给出一个")
        return self


class CellModel(BaseModel):
    row: int = Field(ge=1)
    col: int = Field(ge=1)
    entry: Union[int, List[int]]


class FillingModel(BaseModel):
    cells: List[CellModel]
    basement: Optional[List[int]] = None

    @classmethod
    def from_filling(cls, filling: AugmentedFilling) -> 'FillingModel':
        return cls(cells=[CellModel(row=i, col=j, entry=list(v) if isinstance(v, tuple) else v)
                          for (i, j), v in filling.cells],
                   basement=list(filling.basement) if filling.basement is not None else None)

    def to_filling(self) -> AugmentedFilling:
        cells = {(c.row, c.col): tuple(c.entry) if isinstance(c.entry, list) else c.entry
                 for c in self.cells}
        return AugmentedFilling.from_cells(cells, self.basement)


_REQUIRED = {
    'schur': ('shape',),
    'flagged_schur': ('shape', 'flags_a', 'flags_b'),
    'demazure_atom': ('basement', 'alpha'),
    'key': ('alpha',),
    'hl_E': ('alpha',),
    'hl_P': ('shape',),
    'symplectic_schur': ('shape',),
    'grothendieck': ('shape',),
    'dual_grothendieck': ('shape',),
}


class FamilySpec(BaseModel):
    """一个多项式族成员的完整描述；dilate(k) 给出伸缩后的成员"""

    model_config = ConfigDict(frozen=True)

    family: str
    n: int = Field(ge=0)
    shape: Optional[List[int]] = None
    inner: Optional[List[int]] = None
    alpha: Optional[List[int]] = None
    basement: Optional[List[int]] = None
    flags_a: Optional[List[int]] = None
    flags_b: Optional[List[int]] = None

    @field_validator('family')
    @classmethod
    def _known_family(cls, value: str) -> str:
        if PolynomialFamily.get_by_tag(value) is None:
            raise ValueError(f"未知族 {value!r}，可选：{', '.join(PolynomialFamily.tags())}")
        return value

    @field_validator('shape', 'inner', 'alpha')
    @classmethod
    def _nonnegative(cls, value):
        if value is not None and any(p < 0 for p in value):
            raise ValueError(f"分量必须非负：{value}")
        return value

    @model_validator(mode='after')
    def _required_fields(self):
        missing = [name for name in _REQUIRED[self.family] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.family} 缺少参数：{', '.join(missing)}")
        return self

    @property
    def polynomial_family(self) -> PolynomialFamily:
        return PolynomialFamily.get_by_tag(self.family)

    def dilate(self, k: int) -> 'FamilySpec':
        scaled = {}
        for name in ('shape', 'inner', 'alpha'):
            value = getattr(self, name)
            if value is not None:
                scaled[name] = [k * p for p in value]
        return self.model_copy(update=scaled)


class SequenceModel(BaseModel):
    spec: FamilySpec
    start: int
    values: List[PolynomialModel]


__all__ = [
    'TermModel', 'PolynomialModel', 'RootModel', 'CharPolyModel', 'HPolytopeModel',
    'PolytopeRequest', 'CellModel', 'FillingModel', 'FamilySpec', 'SequenceModel',
]
