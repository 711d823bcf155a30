from .multipoly import MultiPoly
from .unipoly import UniPoly

__all__ = ['MultiPoly', 'UniPoly']
