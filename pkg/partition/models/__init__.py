from .instance import HypothesisCheck, Instance, InstanceSpec, ValidationReport
from .report import BruteForceResult, PartCheck, PartitionReport, VerificationReport

__all__ = [
    'Instance',
    'InstanceSpec',
    'HypothesisCheck',
    'ValidationReport',
    'PartitionReport',
    'PartCheck',
    'VerificationReport',
    'BruteForceResult',
]
