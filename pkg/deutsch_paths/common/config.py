import logging
import os

_logger = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    """Positive integer from the environment; anything else falls back to default."""
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        _logger.warning("ignoring %s=%r: expected a positive integer, using %d", name, raw, default)
        return default
    return value


DEFAULT_TRUNC = _env_int("DEUTSCH_PATHS_TRUNC", 16)
TIMEZONE = os.environ.get("DEUTSCH_PATHS_TZ", "UTC")

# Extra v-order kept before mapping a closed form back to z
V_MARGIN = 2

MAX_ENUMERATION_STEPS = 10

# verify defaults
VERIFY_M_MAX = 6
VERIFY_T_MAX = 5
VERIFY_N_MAX = 12
VERIFY_TRUNC = 16

DET_ORDER = 31             # determinant comparisons run through v^30
DET_M_MAX = 8
KERNEL_T_MAX = 12
ROOT_ORDER = 41            # through z^40
STABILIZATION_MAX = 4      # t, j bound
STABILIZATION_N_MAX = 10
SHIFTED_MAX = 5            # h, t bound for the shifted-boundary check

OUTPUT_FORMATS = ("text", "json", "csv")


class Config:
    """Central access point for all configuration."""

    default_trunc = DEFAULT_TRUNC
    timezone = TIMEZONE
    v_margin = V_MARGIN
    max_enumeration_steps = MAX_ENUMERATION_STEPS

    verify_m_max = VERIFY_M_MAX
    verify_t_max = VERIFY_T_MAX
    verify_n_max = VERIFY_N_MAX
    verify_trunc = VERIFY_TRUNC

    det_order = DET_ORDER
    det_m_max = DET_M_MAX
    kernel_t_max = KERNEL_T_MAX
    root_order = ROOT_ORDER
    stabilization_max = STABILIZATION_MAX
    stabilization_n_max = STABILIZATION_N_MAX
    shifted_max = SHIFTED_MAX

    output_formats = OUTPUT_FORMATS

    @classmethod
    def v_order(cls, n_z: int) -> int:
        """v-space truncation needed to recover a z-series of order n_z."""
        return n_z + cls.v_margin
