from .mixed_service import MixedService

__all__ = ['MixedService']
