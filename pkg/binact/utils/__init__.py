from .results import CheckResult
from .table_kernels import as_witness, found
