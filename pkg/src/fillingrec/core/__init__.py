from .constants import FillingConstants, constants
from .errors import FillingError, UsageError, WindowTooShortError, InconsistencyError
from .settings import Settings, get_settings, reset_settings

__all__ = [
    'FillingConstants',
    'constants',
    'FillingError',
    'UsageError',
    'WindowTooShortError',
    'InconsistencyError',
    'Settings',
    'get_settings',
    'reset_settings',
]
