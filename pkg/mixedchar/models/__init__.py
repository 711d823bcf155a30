from .mixed_spec import MixedSpec

__all__ = ['MixedSpec']
