from .result import CheckResultSerializer, SweepRequestSerializer, SweepSummarySerializer

__all__ = ['CheckResultSerializer', 'SweepRequestSerializer', 'SweepSummarySerializer']
