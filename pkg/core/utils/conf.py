from django.conf import settings

from .constants import DEFAULTS


def weaver_setting(name):
    """Lee una clave de settings.WEAVER; usa DEFAULTS si Django no está configurado."""
    if name not in DEFAULTS:
        raise KeyError(f"Unknown setting {name}")
    if settings.configured:
        return getattr(settings, 'WEAVER', {}).get(name, DEFAULTS[name])
    return DEFAULTS[name]
