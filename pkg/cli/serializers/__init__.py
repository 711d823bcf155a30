from .requests import BoundsGridSerializer, EigenRequestSerializer

__all__ = ['BoundsGridSerializer', 'EigenRequestSerializer']
