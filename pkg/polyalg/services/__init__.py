from .polynomial_service import PolynomialService
from .roots_service import RootCluster, RootService

__all__ = ['PolynomialService', 'RootService', 'RootCluster']
