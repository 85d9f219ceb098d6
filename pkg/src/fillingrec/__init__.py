"""fillingrec：填充定义的多项式族与伸缩序列的线性递推"""

from fillingrec.core.settings import get_settings
from fillingrec.runner import FillingRunner

__version__ = "0.1.0"
__all__ = [
    'get_settings',
    'FillingRunner',
]
