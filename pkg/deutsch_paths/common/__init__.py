from .config import Config
from .errors import (
    ConsistencyError,
    DeutschPathsError,
    InvalidSpecError,
    NonUnitError,
    TruncationError,
    VariableMismatchError,
)
from .formatting import (
    format_section_header,
    format_list_item,
    now_local,
    format_datetime_local,
    format_coefficients,
    format_grid,
    format_suites,
)
