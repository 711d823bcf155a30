from .greedy_service import GreedyService
from .instance_service import InstanceService

__all__ = ['GreedyService', 'InstanceService']
