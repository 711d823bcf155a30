from .query import BoundQuerySerializer, CountOrInfinityField, DeltaResultSerializer

__all__ = ['BoundQuerySerializer', 'CountOrInfinityField', 'DeltaResultSerializer']
