from .base_model import BaseValue
from .phase_space_model import (
    GroupParams,
    PhasePoint,
    PhaseFunction,
    reflect_array,
    same_params,
)
from .operator_model import Signal, OperatorMatrix, ConvMapMatrix
from .continuum_model import SampledLine, ContinuumSignal, PhasePlane


__all__ = [
    "BaseValue",
    "GroupParams",
    "PhasePoint",
    "PhaseFunction",
    "reflect_array",
    "same_params",
    "Signal",
    "OperatorMatrix",
    "ConvMapMatrix",
    "SampledLine",
    "ContinuumSignal",
    "PhasePlane",
]
