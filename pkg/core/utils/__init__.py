from .conf import weaver_setting
from .constants import DEFAULTS, EXIT_CODES, INF_TOKEN

__all__ = ['weaver_setting', 'DEFAULTS', 'EXIT_CODES', 'INF_TOKEN']
