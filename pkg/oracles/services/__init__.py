from .inequality_service import InequalityService
from .sweep_service import SweepService

__all__ = ['InequalityService', 'SweepService']
