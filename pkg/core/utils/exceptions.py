"""
Jerarquía de errores del proyecto.

Cada error lleva un `code` legible por máquina, un `payload` con el
diagnóstico y el código de salida que la CLI debe devolver.
"""
from .constants import EXIT_CODES


class WeaverError(Exception):
    code = 'weaver_error'
    exit_code = EXIT_CODES['NUMERICAL_FAILURE']

    def __init__(self, message, **payload):
        super().__init__(message)
        self.message = message
        self.payload = payload

    def as_dict(self):
        return {'error': self.code, 'message': self.message, 'details': self.payload}


# ---------- errores de entrada ----------
class DimensionMismatchError(WeaverError):
    code = 'dimension_mismatch'
    exit_code = EXIT_CODES['INPUT_ERROR']


class ZeroPolynomialError(WeaverError):
    code = 'zero_polynomial'
    exit_code = EXIT_CODES['INPUT_ERROR']


class DomainError(WeaverError):
    code = 'domain_error'
    exit_code = EXIT_CODES['INPUT_ERROR']


class InvalidInstanceError(WeaverError):
    code = 'invalid_instance'
    exit_code = EXIT_CODES['INPUT_ERROR']


class InfeasibleSpecError(WeaverError):
    code = 'infeasible_spec'
    exit_code = EXIT_CODES['INPUT_ERROR']


class NotAPartitionError(WeaverError):
    code = 'not_a_partition'
    exit_code = EXIT_CODES['INPUT_ERROR']


class CapExceededError(WeaverError):
    code = 'cap_exceeded'
    exit_code = EXIT_CODES['INPUT_ERROR']


class NotInConeError(WeaverError):
    code = 'not_in_cone'
    exit_code = EXIT_CODES['INPUT_ERROR']


# ---------- fallas numéricas ----------
class NotRealRootedError(WeaverError):
    code = 'not_real_rooted'


class NotHyperbolicError(WeaverError):
    code = 'not_hyperbolic'


class RankDegeneracyError(WeaverError):
    code = 'rank_degeneracy'


class BracketError(WeaverError):
    code = 'bracket_failure'


class EmptyFeasibleSetError(WeaverError):
    code = 'empty_feasible_set'
