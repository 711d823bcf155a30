from .context import PhiEtaContext
from .result import CheckResult, CheckStatus, SweepSummary

__all__ = ['PhiEtaContext', 'CheckResult', 'CheckStatus', 'SweepSummary']
