from .base_schema import *
from .report_schema import *
from .suite_schema import *
