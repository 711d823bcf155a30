from .form import ConeVector, HyperbolicForm

__all__ = ['HyperbolicForm', 'ConeVector']
