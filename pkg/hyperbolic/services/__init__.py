from .form_service import Certificate, FormService
from .spectral_service import SpectralService

__all__ = ['FormService', 'SpectralService', 'Certificate']
