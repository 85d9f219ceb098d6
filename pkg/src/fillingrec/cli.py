"""fillingrec 命令行

子命令：poly / seq / check / identity / specialize / polytope / golden。
数学输出一律为 JSON，写到 stdout（或 --out 指定的文件）；人读摘要写到 stderr。

退出码:
    0 通过，1 检查未通过，2 用法错误，3 窗口过短，4 内部不一致
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from fillingrec.core.constants import constants
from fillingrec.core.errors import FillingError
from fillingrec.core.identities import IDENTITIES
from fillingrec.core.settings import get_settings, reset_settings
from fillingrec.models.enums import PolynomialFamily
from fillingrec.models.schema import FamilySpec, PolytopeRequest
from fillingrec.models.shapes import parse_composition
from fillingrec.runner import FillingRunner, dumps

logger = logging.getLogger("fillingrec")

# 各恒等式从命令行取哪些参数
_IDENTITY_PARAMS = {
    'hlp_sum': ('mu', 'n'),
    'grothendieck_bottom': ('shape', 'n'),
    'key_operator': ('max_size', 'max_n'),
}


def _composition(text: str):
    return list(parse_composition(text))


def _family_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--family", required=True, choices=PolynomialFamily.tags())
    parent.add_argument("--n", type=int, required=True, help="变量个数")
    parent.add_argument("--shape", type=_composition, help="分拆，如 2,1")
    parent.add_argument("--inner", type=_composition, help="斜形状的内分拆")
    parent.add_argument("--alpha", type=_composition, help="弱组合，如 0,2,1")
    parent.add_argument("--basement", type=_composition, help="基底，如 1,3,2")
    parent.add_argument("--flags-a", dest="flags_a", type=_composition, help="行下界旗标")
    parent.add_argument("--flags-b", dest="flags_b", type=_composition, help="行上界旗标")
    return parent


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strategy", choices=("transfer", "oracle"), help="枚举策略，缺省取配置")
    common.add_argument("--out", type=Path, help="JSON 输出文件，缺省写 stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="输出 INFO 级日志")

    parser = argparse.ArgumentParser(
        prog="fillingrec",
        description="填充定义的多项式族：生成、伸缩序列的线性递推与交叉检验",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    family = _family_parent()

    p = sub.add_parser("poly", parents=[common, family], help="计算一个多项式")
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("seq", parents=[common, family], help="伸缩序列 k = 0..kmax")
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(handler=_cmd_seq)

    p = sub.add_parser("check", parents=[common, family], help="递推检验")
    p.add_argument("--kmax", type=int)
    p.add_argument("--order", type=int, help="指定递推阶，缺省取特征多项式次数或自动检测")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("identity", parents=[common], help="恒等式检验")
    p.add_argument("name", help=f"可选：{', '.join(IDENTITIES)}")
    p.add_argument("--mu", type=_composition)
    p.add_argument("--shape", type=_composition)
    p.add_argument("--n", type=int)
    p.add_argument("--max-size", dest="max_size", type=int)
    p.add_argument("--max-n", dest="max_n", type=int)
    p.set_defaults(handler=_cmd_identity)

    p = sub.add_parser("specialize", parents=[common], help="K_{kα}(1^n) 的插值多项式")
    p.add_argument("--alpha", type=_composition, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--kmax", type=int)
    p.set_defaults(handler=_cmd_specialize)

    p = sub.add_parser("polytope", parents=[common], help="多面体或面并的整点变换递推")
    p.add_argument("file", type=Path, help="JSON：{\"polytope\": {...}} 或 {\"faces\": [...]}")
    p.add_argument("--kmax", type=int)
    p.set_defaults(handler=_cmd_polytope)

    p = sub.add_parser("golden", parents=[common], help="golden 语料")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--write", type=Path, metavar="DIR")
    group.add_argument("--check", type=Path, metavar="DIR")
    p.set_defaults(handler=_cmd_golden)

    return parser.parse_args(argv)


def _spec(args: argparse.Namespace) -> FamilySpec:
    fields = ('family', 'n', 'shape', 'inner', 'alpha', 'basement', 'flags_a', 'flags_b')
    return FamilySpec.model_validate({name: getattr(args, name) for name in fields})


# ====================================================
# 子命令
# ====================================================

def _cmd_poly(runner: FillingRunner, args: argparse.Namespace) -> Dict[str, Any]:
    return runner.poly(_spec(args))


def _cmd_seq(runner: FillingRunner, args: argparse.Namespace) -> Dict[str, Any]:
    return runner.seq(_spec(args), args.kmax)


def _cmd_check(runner: FillingRunner, args: argparse.Namespace) -> Dict[str, Any]:
    return runner.check(_spec(args), args.kmax, args.order)


def _cmd_identity(runner: FillingRunner, args: argparse.Namespace) -> Dict[str, Any]:
    names = _IDENTITY_PARAMS.get(args.name, ())
    params = {name: getattr(args, name) for name in names if getattr(args, name) is not None}
    return runner.identity(args.name, params)


def _cmd_specialize(runner: FillingRunner, args: argparse.Namespace) -> Dict[str, Any]:
    return runner.specialize(args.alpha, args.n, args.kmax)


def _cmd_polytope(runner: FillingRunner, args: argparse.Namespace) -> Dict[str, Any]:
    request = PolytopeRequest.model_validate_json(args.file.read_text(encoding="utf-8"))
    return runner.polytope(request, args.kmax)


def _cmd_golden(runner: FillingRunner, args: argparse.Namespace) -> Dict[str, Any]:
    if args.write is not None:
        return runner.golden_write(args.write)
    return runner.golden_check(args.check)


# ====================================================
# 入口
# ====================================================

def _configure_logging(verbose: bool) -> None:
    level = logging.INFO if verbose else get_settings().get('logging', 'level', 'WARNING')
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(name)s] %(message)s"))
    logger.handlers[:] = [handler]
    logger.setLevel(level)
    logger.propagate = False


def main(argv: Optional[List[str]] = None) -> int:
    args = _parse_args(argv)
    reset_settings()
    config = {'enumeration': {'strategy': args.strategy}} if args.strategy else None
    try:
        runner = FillingRunner(config)
        _configure_logging(args.verbose)
        report = args.handler(runner, args)
    except ValidationError as exc:
        print(f"[fillingrec] 参数不合法：{exc}", file=sys.stderr)
        return constants.EXIT_CODES['usage']
    except FillingError as exc:
        print(f"[fillingrec] {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"[fillingrec] 无法读取输入：{exc}", file=sys.stderr)
        return constants.EXIT_CODES['usage']

    payload = dumps(report)
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(payload + "\n", encoding="utf-8")
    else:
        print(payload)
    passed = report.get('passed', True)
    print(f"[fillingrec] {args.command}: {'通过' if passed else '未通过'}", file=sys.stderr)
    return constants.EXIT_CODES['pass'] if passed else constants.EXIT_CODES['fail']


if __name__ == "__main__":
    raise SystemExit(main())
