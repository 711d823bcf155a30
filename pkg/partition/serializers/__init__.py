from .instance import InstanceSerializer, InstanceSpecSerializer
from .report import PartitionReportSerializer

__all__ = ['InstanceSerializer', 'InstanceSpecSerializer', 'PartitionReportSerializer']
