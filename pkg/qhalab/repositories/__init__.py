from .base_repo import BaseRepository
from .phase_function_repo import PhaseFunctionRepository, PhasePlaneRepository
from .operator_repo import OperatorRepository, SignalRepository
from .report_repo import ReportRepository

__all__ = [
    "BaseRepository",
    "PhaseFunctionRepository",
    "PhasePlaneRepository",
    "OperatorRepository",
    "SignalRepository",
    "ReportRepository",
]
