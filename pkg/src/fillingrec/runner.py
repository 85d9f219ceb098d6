"""填充递推统一调度器

把一个族请求（FamilySpec）翻译成生成器调用、伸缩窗口、递推检验与恒等式检验，
返回可直接序列化为 JSON 的报告字典。CLI 的每个子命令对应这里的一个方法。

依赖:
    - core.generators, core.identities
    - core.math.recurrence, core.math.polytope, core.math.operators
    - models.schema（pydantic 模型）
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from fillingrec.core import generators
from fillingrec.core.constants import constants
from fillingrec.core.errors import UnsupportedProductError, UsageError
from fillingrec.core.identities import IDENTITIES
from fillingrec.core.math.operators import discover_index_map
from fillingrec.core.math.polynomial import MultivariatePolynomial
from fillingrec.core.math.polytope import (
    faces_union_char_poly,
    faces_union_window,
    idp_decomposition_check,
    idp_recurrence_check,
    lattice_points,
    transform_window,
)
from fillingrec.core.math.recurrence import (
    CharPoly,
    char_poly_family,
    char_poly_key,
    detect_order,
    first_failure,
    satisfies_order,
    specialize_and_fit,
)
from fillingrec.core.settings import get_settings
from fillingrec.models.schema import (
    CharPolyModel,
    FamilySpec,
    PolynomialModel,
    PolytopeRequest,
    SequenceModel,
)

logger = logging.getLogger(__name__)

# 有乘积型特征多项式、走折叠列可达性的族
_PRODUCT_FAMILIES = ('schur', 'flagged_schur', 'demazure_atom', 'symplectic_schur', 'dual_grothendieck')


def _problem(spec: FamilySpec) -> Optional[generators.FillingProblem]:
    """hl_P 没有填充模型，返回 None"""
    builders: Dict[str, Callable[[], generators.FillingProblem]] = {
        'schur': lambda: generators.schur_problem(spec.shape, spec.n, spec.inner),
        'flagged_schur': lambda: generators.flagged_schur_problem(
            spec.shape, spec.flags_a, spec.flags_b, spec.n, spec.inner),
        'demazure_atom': lambda: generators.atom_problem(spec.basement, spec.alpha, spec.n),
        'key': lambda: generators.key_problem(spec.alpha, spec.n),
        'hl_E': lambda: generators.hl_E_problem(spec.alpha, spec.n),
        'symplectic_schur': lambda: generators.symplectic_problem(spec.shape, spec.n),
        'grothendieck': lambda: generators.grothendieck_problem(spec.shape, spec.n),
        'dual_grothendieck': lambda: generators.dual_grothendieck_problem(spec.shape, spec.n),
    }
    builder = builders.get(spec.family)
    return builder() if builder else None


def _dump(p: MultivariatePolynomial) -> Dict[str, Any]:
    return PolynomialModel.from_polynomial(p).model_dump()


def dumps(report: Union[Dict[str, Any], List[Any]]) -> str:
    """报告的规范 JSON 文本（同一报告总是得到相同字节）"""
    return json.dumps(report, ensure_ascii=False, indent=2)


class FillingRunner:
    """填充递推统一调度器"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.settings = get_settings(config)
        self.run_id = f"run_{datetime.now().strftime('%Y%m%d_%H%M%S')}"
        self.stats = {
            'polynomials': 0,
            'windows': 0,
            'checks_passed': 0,
            'checks_failed': 0,
        }

    # ====================================================
    # 基本计算
    # ====================================================

    def polynomial(self, spec: FamilySpec, strategy: Optional[str] = None) -> MultivariatePolynomial:
        problem = _problem(spec)
        self.stats['polynomials'] += 1
        if problem is None:
            return generators.hl_P(spec.shape, spec.n)
        return problem.generating_function(strategy)

    def window(self, spec: FamilySpec, kmax: int, start: int = 0,
               strategy: Optional[str] = None) -> List[MultivariatePolynomial]:
        """[P_{kλ}]_{k=start..kmax}"""
        if kmax < 0:
            raise UsageError(f"kmax 必须非负：{kmax}")
        self.stats['windows'] += 1
        problem = _problem(spec)
        if problem is None:
            return generators.hl_P_window(spec.shape, spec.n, kmax, start)
        return generators.dilation_window(problem, kmax, start, strategy)

    def char_poly(self, spec: FamilySpec) -> Optional[CharPoly]:
        """乘积型特征多项式；没有乘积公式的族返回 None"""
        if spec.family == 'key':
            return char_poly_key(spec.alpha, spec.n)
        if spec.family not in _PRODUCT_FAMILIES:
            return None
        problem = _problem(spec)
        try:
            return char_poly_family(problem.family, problem.diagram, problem.basement)
        except UnsupportedProductError:
            logger.info("no product formula for %s, falling back to order detection", spec.family)
            return None

    # ====================================================
    # 子命令
    # ====================================================

    def poly(self, spec: FamilySpec) -> Dict[str, Any]:
        p = self.polynomial(spec)
        logger.info("%s: %d terms", spec.family, len(p.items()))
        return _dump(p)

    def seq(self, spec: FamilySpec, kmax: int) -> Dict[str, Any]:
        values = self.window(spec, kmax)
        model = SequenceModel(spec=spec, start=0,
                              values=[PolynomialModel.from_polynomial(p) for p in values])
        return model.model_dump(exclude_none=True)

    def check(self, spec: FamilySpec, kmax: Optional[int] = None,
              order: Optional[int] = None) -> Dict[str, Any]:
        """递推检验：乘积族做零化检验，所有族做行列式检验

        窗口从该族的起始下标 s 开始；kmax 缺省为 s + 2r + 1。
        """
        start = constants.recurrence_start(spec.family)
        chi = self.char_poly(spec)
        if order is not None and order < 0:
            raise UsageError(f"递推阶必须非负：{order}")
        r = order if order is not None else (chi.degree if chi is not None else self.settings.max_detect_order)
        if kmax is None:
            kmax = start + 2 * r + 1
        if kmax < start:
            raise UsageError(f"kmax={kmax} 小于起始下标 {start}")
        window = self.window(spec, kmax, start)
        report: Dict[str, Any] = {
            'family': spec.family,
            'start': start,
            'kmax': kmax,
        }
        checks = []
        if chi is not None:
            report['char_poly'] = CharPolyModel.from_char_poly(chi).model_dump()
            failing = first_failure(chi, window)
            checks.append({
                'test': 'annihilation',
                'order': chi.degree,
                'passed': failing is None,
                'failing_index': None if failing is None else start + failing,
            })
        if order is not None or chi is not None:
            checks.append({'test': 'determinant', 'order': r, 'passed': satisfies_order(window, r)})
        else:
            detected = detect_order(window, r)
            checks.append({'test': 'detect_order', 'order': detected, 'passed': detected is not None})
        report['checks'] = checks
        report['passed'] = all(c['passed'] for c in checks)
        self.stats['checks_passed' if report['passed'] else 'checks_failed'] += 1
        logger.info("check %s: %s", spec.family, "pass" if report['passed'] else "fail")
        return report

    def identity(self, name: str, params: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        if name not in IDENTITIES:
            raise UsageError(f"未知恒等式 {name!r}，可选：{', '.join(IDENTITIES)}")
        params = dict(params or {})
        try:
            result = IDENTITIES[name](**params)
        except TypeError as exc:
            raise UsageError(f"{name} 的参数不合法：{exc}") from exc
        report = {
            'identity': result.identity,
            'params': result.params,
            'cases': result.cases,
            'passed': result.passed,
            'failures': result.failures,
        }
        if name == 'key_operator':
            report['index_map'] = discover_index_map(result.params['max_size'], result.params['max_n'])
        self.stats['checks_passed' if result.passed else 'checks_failed'] += 1
        return report

    def specialize(self, alpha: Sequence[int], n: Optional[int] = None,
                   kmax: Optional[int] = None) -> Dict[str, Any]:
        fitted = specialize_and_fit(alpha, n, kmax, self.settings.fit_margin)
        return {
            'alpha': list(alpha),
            'n': len(alpha) if n is None else n,
            'coefficients': [str(c) for c in fitted.coefficients],
            'degree': fitted.degree,
            'degree_bound': fitted.degree_bound,
            'samples': list(fitted.samples),
            'held_out': [list(pair) for pair in fitted.held_out],
            'nonnegative': fitted.nonnegative_coefficients,
            'verdict': 'nonnegative' if fitted.nonnegative_coefficients else 'negative-found',
            'passed': True,
        }

    def polytope(self, request: PolytopeRequest, kmax: Optional[int] = None) -> Dict[str, Any]:
        if request.polytope is not None:
            P = request.polytope.to_polytope()
            points = lattice_points(P, 1)
            kmax = len(points) + 1 if kmax is None else kmax
            result = idp_recurrence_check(P, kmax)
            window = transform_window(P, kmax)
            report = {
                'kind': 'polytope',
                'lattice_points': [list(p) for p in points],
                'idp_decomposition': idp_decomposition_check(P),
                'char_poly': CharPolyModel.from_char_poly(result.char_poly).model_dump(),
                'window': [_dump(p) for p in window],
                'kmax': kmax,
                'failing_index': result.failing_index,
                'passed': result.passed,
            }
        else:
            faces = [f.to_polytope() for f in request.faces]
            chi = faces_union_char_poly(faces)
            kmax = chi.degree + 1 if kmax is None else kmax
            window = faces_union_window(faces, kmax)
            failing = first_failure(chi, window)
            report = {
                'kind': 'faces',
                'num_faces': len(faces),
                'char_poly': CharPolyModel.from_char_poly(chi).model_dump(),
                'window': [_dump(p) for p in window],
                'kmax': kmax,
                'failing_index': failing,
                'passed': failing is None,
            }
        self.stats['checks_passed' if report['passed'] else 'checks_failed'] += 1
        return report

    # ====================================================
    # golden 语料
    # ====================================================

    def golden_write(self, directory: Union[str, Path]) -> Dict[str, Any]:
        """oracle 路径计算语料中的每个请求并写出"""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        written = []
        for request in constants.GOLDEN_CORPUS:
            spec = FamilySpec.model_validate({k: v for k, v in request.items() if k != 'name'})
            text = dumps(_dump(self.polynomial(spec, strategy='oracle')))
            (directory / f"{request['name']}.json").write_text(text + "\n", encoding='utf-8')
            written.append(request['name'])
        logger.info("golden: wrote %d files to %s", len(written), directory)
        return {'written': written, 'passed': True}

    def golden_check(self, directory: Union[str, Path]) -> Dict[str, Any]:
        """优化路径重算语料，与已写出的文件逐字节比较"""
        directory = Path(directory)
        mismatches = []
        for request in constants.GOLDEN_CORPUS:
            path = directory / f"{request['name']}.json"
            if not path.exists():
                mismatches.append({'name': request['name'], 'reason': 'missing'})
                continue
            spec = FamilySpec.model_validate({k: v for k, v in request.items() if k != 'name'})
            text = dumps(_dump(self.polynomial(spec, strategy='transfer'))) + "\n"
            if path.read_text(encoding='utf-8') != text:
                mismatches.append({'name': request['name'], 'reason': 'differs'})
        passed = not mismatches
        self.stats['checks_passed' if passed else 'checks_failed'] += 1
        return {'checked': len(constants.GOLDEN_CORPUS), 'mismatches': mismatches, 'passed': passed}

    def get_state(self) -> Dict[str, Any]:
        return {
            'run_id': self.run_id,
            'threads': self.settings.threads,
            'strategy': self.settings.strategy,
            'stats': dict(self.stats),
        }


__all__ = ['FillingRunner', 'dumps']
