"""填充族注册表"""

from typing import Any, Dict, Optional

from fillingrec.core.errors import UsageError
from fillingrec.core.families.base import FamilyBase
from fillingrec.core.families.augmented import NAWFFamily, SSAFFamily
from fillingrec.core.families.tableaux import FlaggedFamily, SSYTFamily, SymplecticFamily
from fillingrec.core.families.set_valued import RPPFamily, SetValuedFamily
from fillingrec.models.enums import FillingFamily


def make_family(family: FillingFamily, n: int, config: Optional[Dict[str, Any]] = None,
                **params) -> FamilyBase:
    """按族标签构造族实例；n 为变量个数"""
    if family is FillingFamily.SSAF:
        return SSAFFamily(params.get('alphabet', n), n, config)
    if family is FillingFamily.NAWF:
        return NAWFFamily(params.get('alphabet', n), n, config)
    if family is FillingFamily.SSYT:
        return SSYTFamily(n, n, config)
    if family is FillingFamily.FLAGGED:
        return FlaggedFamily(n, params['flags_a'], params['flags_b'], n, config)
    if family is FillingFamily.SYMPLECTIC:
        return SymplecticFamily(n, config)
    if family is FillingFamily.SET_VALUED:
        return SetValuedFamily(n, n, config)
    if family is FillingFamily.RPP:
        return RPPFamily(n, n, config)
    raise UsageError(f"未知填充族：{family}")


__all__ = [
    'FamilyBase', 'SSAFFamily', 'NAWFFamily', 'SSYTFamily', 'FlaggedFamily',
    'SymplecticFamily', 'SetValuedFamily', 'RPPFamily', 'make_family',
]
