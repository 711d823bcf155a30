from pathlib import Path
from decouple import config

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='weaver-local-only-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',
    'core.apps.CoreConfig',
    'polyalg.apps.PolyalgConfig',
    'hyperbolic.apps.HyperbolicConfig',
    'mixedchar.apps.MixedcharConfig',
    'bounds.apps.BoundsConfig',
    'partition.apps.PartitionConfig',
    'oracles.apps.OraclesConfig',
    'cli.apps.CliConfig',
]

# Sin base de datos: todo el estado vive en memoria durante un comando.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': False,
}

# Configuración numérica - tolerancias y límites de búsqueda
WEAVER = {
    'TOL_CLEAN': config('WEAVER_TOL_CLEAN', default=1e-12, cast=float),
    'REAL_ROOT_TOL': config('WEAVER_REAL_ROOT_TOL', default=1e-7, cast=float),
    'RANK_TOL': config('WEAVER_RANK_TOL', default=1e-8, cast=float),
    'CONE_TOL': config('WEAVER_CONE_TOL', default=1e-9, cast=float),
    'CERT_SAMPLES': config('WEAVER_CERT_SAMPLES', default=200, cast=int),
    'STURM_MAX_DEGREE': config('WEAVER_STURM_MAX_DEGREE', default=12, cast=int),
    'DELTA_GRID_POINTS': config('WEAVER_DELTA_GRID_POINTS', default=320, cast=int),
    'DELTA_MAX': config('WEAVER_DELTA_MAX', default=8.0, cast=float),
    'DELTA_REFINE_WIDTH': config('WEAVER_DELTA_REFINE_WIDTH', default=1e-7, cast=float),
    'BISECTION_TOL': config('WEAVER_BISECTION_TOL', default=1e-12, cast=float),
    'BRUTE_FORCE_CAP': config('WEAVER_BRUTE_FORCE_CAP', default=2_000_000, cast=int),
    'SLACK_TOL': config('WEAVER_SLACK_TOL', default=1e-9, cast=float),
    'JOBS': config('WEAVER_JOBS', default=1, cast=int),
    'SEED': config('WEAVER_SEED', default=0, cast=int),
}

LOG_LEVEL = config('WEAVER_LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        app: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for app in ('core', 'polyalg', 'hyperbolic', 'mixedchar', 'bounds', 'partition', 'oracles', 'cli')
    },
}
