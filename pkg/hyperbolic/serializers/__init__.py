from .form import FormDescriptorSerializer, PointField

__all__ = ['FormDescriptorSerializer', 'PointField']
