from .base_service import BaseService
from .verify_service import VerifyService
from .continuum_service import ContinuumService
from .regularity_service import RegularityService
from .localization_service import LocalizationService

__all__ = [
    "BaseService",
    "VerifyService",
    "ContinuumService",
    "RegularityService",
    "LocalizationService",
]
