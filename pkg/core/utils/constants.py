"""
Constantes del sistema
"""

# Valores por defecto cuando Django no está configurado (uso como librería)
DEFAULTS = {
    'TOL_CLEAN': 1e-12,
    'REAL_ROOT_TOL': 1e-7,
    'RANK_TOL': 1e-8,
    'CONE_TOL': 1e-9,
    'CERT_SAMPLES': 200,
    'STURM_MAX_DEGREE': 12,
    'DELTA_GRID_POINTS': 320,
    'DELTA_MAX': 8.0,
    'DELTA_REFINE_WIDTH': 1e-7,
    'BISECTION_TOL': 1e-12,
    'BRUTE_FORCE_CAP': 2_000_000,
    'SLACK_TOL': 1e-9,
    'JOBS': 1,
    'SEED': 0,
}

# Códigos de salida de la CLI
EXIT_CODES = {
    'SUCCESS': 0,
    'CHECK_FAILURE': 1,
    'INPUT_ERROR': 2,
    'NUMERICAL_FAILURE': 3,
}

# Familias de formas hiperbólicas incorporadas
FORM_KINDS = ('product', 'symdet', 'lorentz', 'elemsym', 'custom')

# Familias usadas por los barridos de verificación
SWEEP_FAMILIES = {
    'product': {'kind': 'product', 'n': 3},
    'lorentz': {'kind': 'lorentz', 'n': 3},
    'symdet2': {'kind': 'symdet', 'n': 2},
    'symdet3': {'kind': 'symdet', 'n': 3},
    'elemsym': {'kind': 'elemsym', 'n': 4, 'k': 2},
}

# Conjuntos de lemas disponibles en `verify`
LEMMA_SETS = (
    'correlation',
    'trec',
    'post',
    'stepped',
    'fk1',
    'newton',
    'stayabove',
    'stayabove_margin',
    'eng2',
)

# Representación JSON del infinito para m y r
INF_TOKEN = 'inf'
