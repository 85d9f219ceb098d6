from enum import Enum


class EntryKind(Enum):
    """填充格子里放的是什么"""
    SCALAR = ("scalar", "正整数")
    SET = ("set", "非空整数集合")

    def __init__(self, tag, chinese_name):
        self.tag = tag
        self.chinese_name = chinese_name


class FillingFamily(Enum):
    """填充族：每一族由列内约束与相邻列约束刻画"""
    SSAF = ("ssaf", "半标准增广填充", True, EntryKind.SCALAR)
    NAWF = ("nawf", "非攻击弱递减填充", True, EntryKind.SCALAR)
    SSYT = ("ssyt", "半标准杨表", False, EntryKind.SCALAR)
    FLAGGED = ("flagged", "旗标半标准杨表", False, EntryKind.SCALAR)
    SYMPLECTIC = ("symplectic", "King 辛表", False, EntryKind.SCALAR)
    SET_VALUED = ("set_valued", "集合值杨表", False, EntryKind.SET)
    RPP = ("rpp", "反向平面分拆", False, EntryKind.SCALAR)

    def __init__(self, tag, chinese_name, augmented, entry_kind):
        self.tag = tag
        self.chinese_name = chinese_name
        self.augmented = augmented
        self.entry_kind = entry_kind

    @classmethod
    def get_by_tag(cls, tag):
        for family in cls:
            if family.tag == tag:
                return family
        return None


class PolynomialFamily(Enum):
    """生成函数族（CLI 的 --family 取值）"""
    SCHUR = ("schur", "Schur 多项式", FillingFamily.SSYT)
    FLAGGED_SCHUR = ("flagged_schur", "旗标 Schur 多项式", FillingFamily.FLAGGED)
    DEMAZURE_ATOM = ("demazure_atom", "Demazure 原子", FillingFamily.SSAF)
    KEY = ("key", "key 多项式", FillingFamily.SSAF)
    HL_E = ("hl_E", "非对称 Hall-Littlewood E", FillingFamily.NAWF)
    HL_P = ("hl_P", "Hall-Littlewood P", None)
    SYMPLECTIC_SCHUR = ("symplectic_schur", "辛 Schur 多项式", FillingFamily.SYMPLECTIC)
    GROTHENDIECK = ("grothendieck", "对称 Grothendieck 多项式", FillingFamily.SET_VALUED)
    DUAL_GROTHENDIECK = ("dual_grothendieck", "对偶 Grothendieck 多项式", FillingFamily.RPP)

    def __init__(self, tag, chinese_name, filling_family):
        self.tag = tag
        self.chinese_name = chinese_name
        self.filling_family = filling_family

    @classmethod
    def get_by_tag(cls, tag):
        for family in cls:
            if family.tag == tag:
                return family
        return None

    @classmethod
    def tags(cls):
        return [family.tag for family in cls]
