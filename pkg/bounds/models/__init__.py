from .query import INF, BoundQuery, DeltaResult, URPoint

__all__ = ['INF', 'BoundQuery', 'URPoint', 'DeltaResult']
