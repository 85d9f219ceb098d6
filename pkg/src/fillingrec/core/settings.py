"""运行配置：所有可调参数的唯一入口

线程数、枚举策略、检测阶数上限等全部集中在 Settings.config；
计算模块只读取，不自带阈值。环境变量 FILLINGS_THREADS 在构造时读取一次。

依赖:
    - core.constants（冻结约定作为默认值）

理论依据: 决策记录 005：配置来源规则
"""

import os
import logging
from typing import Any, Dict, Optional

from fillingrec.core.constants import constants
from fillingrec.core.errors import UsageError

logger = logging.getLogger(__name__)

THREADS_ENV = "FILLINGS_THREADS"


class Settings:
    """各计算核心的唯一参数来源"""

    def __init__(self, config: Optional[Dict] = None):
        self.config = self._default_config()
        self.update(config)

    def update(self, config: Optional[Dict] = None):
        """按节合并覆盖项，同节未给出的键保持原值"""
        for section, values in (config or {}).items():
            self.config.setdefault(section, {}).update(values)

    def _default_config(self) -> Dict:
        """默认配置，所有参数集中在这里"""
        return {
            'enumeration': {
                'threads': _threads_from_env(),
                'strategy': 'transfer',  # transfer | oracle
            },
            'statistics': {
                'dn_includes_basement': constants.DN_INCLUDES_BASEMENT,
            },
            'recurrence': {
                'max_detect_order': constants.MAX_DETECT_ORDER,
                'fit_margin': 1,  # 插值后额外验证的样本数
            },
            'polytope': {
                'verify_box': True,
                'idp_check_max_k': 3,
            },
            'logging': {
                'level': 'WARNING',
            },
        }

    # ---------- 读取接口 ----------
    @property
    def threads(self) -> int:
        return int(self.config['enumeration']['threads'])

    @property
    def strategy(self) -> str:
        return self.config['enumeration']['strategy']

    @property
    def dn_includes_basement(self) -> bool:
        return bool(self.config['statistics']['dn_includes_basement'])

    @property
    def max_detect_order(self) -> int:
        return int(self.config['recurrence']['max_detect_order'])

    @property
    def fit_margin(self) -> int:
        return int(self.config['recurrence']['fit_margin'])

    def get(self, section: str, key: str, default: Any = None) -> Any:
        return self.config.get(section, {}).get(key, default)


def _threads_from_env() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"{THREADS_ENV} 必须是正整数，收到 {raw!r}") from exc
    if value < 1:
        raise UsageError(f"{THREADS_ENV} 必须是正整数，收到 {raw!r}")
    return value


# 全局单例（整个进程共用一份配置）
_SETTINGS: Optional[Settings] = None


def get_settings(config: Optional[Dict] = None) -> Settings:
    """获取全局配置单例

    首次调用时以 config 构造；之后再给出的 config 合并进已有单例。
    """
    global _SETTINGS
    if _SETTINGS is None:
        _SETTINGS = Settings(config)
        logger.debug("settings initialised: %s", _SETTINGS.config)
    elif config:
        _SETTINGS.update(config)
        logger.info("settings updated: %s", config)
    return _SETTINGS


def reset_settings():
    """重置配置（仅用于测试和 CLI 重新读取环境变量）"""
    global _SETTINGS
    _SETTINGS = None


__all__ = ['Settings', 'get_settings', 'reset_settings', 'THREADS_ENV']
