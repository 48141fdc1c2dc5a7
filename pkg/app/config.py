import logging
import os
import sys
from typing import Optional

from pydantic import BaseModel, ConfigDict

from .errors import ConfigError

DEFAULT_ORACLE_BUDGET = 1_000_000
DEFAULT_ORACLE_MAX_LENGTH = 14


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    oracle_budget: int = DEFAULT_ORACLE_BUDGET
    oracle_max_length: int = DEFAULT_ORACLE_MAX_LENGTH
    log_level: str = "WARNING"
    admin_password: Optional[str] = None


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


def get_settings() -> Settings:
    """Read settings from the environment (call load_dotenv() first to pick up .env)."""
    return Settings(
        oracle_budget=_int_from_env("ARTIN_ORACLE_BUDGET", DEFAULT_ORACLE_BUDGET),
        oracle_max_length=_int_from_env("ARTIN_ORACLE_MAX_LENGTH", DEFAULT_ORACLE_MAX_LENGTH),
        log_level=os.getenv("ARTIN_LOG_LEVEL", "WARNING").upper(),
        admin_password=os.getenv("ADMIN_PASSWORD"),
    )


def configure_logging(level: str = "WARNING") -> None:
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ConfigError(f"Unknown log level {level!r}")
    logging.basicConfig(
        level=numeric,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
