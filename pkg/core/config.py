import logging
import os
from typing import TypedDict

from core.constants import FLAGS_MAX_TOTAL, MAX_DIM_ENV_VAR, SERIES_MAX_TOTAL
from core.exceptions import ConfigError, TooLarge

logger = logging.getLogger(__name__)


class DeskCaps(TypedDict):
    series_max_total: int
    flags_max_total: int


def load_caps() -> DeskCaps:
    """Read the desk-scale caps, honouring the QUIVERLAB_MAX_DIM override.

    Raises:
        ConfigError: The override is set but is not a positive integer.
    """
    caps: DeskCaps = {
        "series_max_total": SERIES_MAX_TOTAL,
        "flags_max_total": FLAGS_MAX_TOTAL,
    }
    raw = os.environ.get(MAX_DIM_ENV_VAR)
    if raw is None or raw.strip() == "":
        return caps

    try:
        value = int(raw)
    except ValueError as err:
        raise ConfigError(f"{MAX_DIM_ENV_VAR} must be an integer, got {raw!r}") from err
    if value <= 0:
        raise ConfigError(f"{MAX_DIM_ENV_VAR} must be positive, got {value}")

    logger.debug(f"{MAX_DIM_ENV_VAR}={value} overrides the default caps")
    caps["series_max_total"] = value
    caps["flags_max_total"] = value
    return caps


def ensure_within_cap(total: int, cap_name: str) -> None:
    cap = load_caps()[cap_name]  # type: ignore[literal-required]
    if total > cap:
        raise TooLarge(f"total dimension {total} exceeds the {cap_name} cap of {cap}")
