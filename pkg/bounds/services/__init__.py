from .delta_service import DeltaService
from .region_service import RegionService

__all__ = ['DeltaService', 'RegionService']
