"""Runtime settings read from the environment."""

import os
from dataclasses import dataclass
from typing import Self

from weakval.core.errors import ConfigError

THREADS_ENV_VAR = "WEAKVAL_THREADS"


@dataclass(frozen=True, slots=True)
class Settings:
    """Process-wide settings.

    Attributes:
        threads: Cap on worker threads used by FFTs. Results do not depend on it.
    """

    threads: int = 1

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ConfigError(f"{THREADS_ENV_VAR} must be a positive integer")

    @classmethod
    def from_env(cls) -> Self:
        """Build settings from ``WEAKVAL_THREADS`` (unset means single-threaded)."""
        raw = os.getenv(THREADS_ENV_VAR)
        if raw is None or raw.strip() == "":
            return cls()
        try:
            threads = int(raw)
        except ValueError as e:
            raise ConfigError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from e
        return cls(threads=threads)


_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the active settings, reading the environment on first use."""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def configure(settings: Settings | None) -> None:
    """Replace the active settings. ``None`` re-reads the environment on next use."""
    global _settings
    _settings = settings
