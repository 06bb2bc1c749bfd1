"""
Runtime Settings
================

Defaults for the knobs shared by the command line and the catalog harness: the Gröbner
reduction-step budget, the seed of the randomized suites, the log level and the parameter sample
grid.

Sources, highest precedence first:
 1. Explicit overrides passed to `load_settings` (the command-line flags).
 2. Process environment: `NOVIKOV_BUDGET`, `NOVIKOV_SEED`, `NOVIKOV_LOG_LEVEL`,
    `NOVIKOV_CATALOG_BUDGET`, `NOVIKOV_SAMPLE_GRID` (comma separated rationals).
 3. A `.env` file in the working directory, read with `dotenv.dotenv_values()` when the `dotenv`
    package is installed.
 4. The defaults of `Settings`.

Example Usage:
-------------
```python
from novikov_groebner.settings import load_settings

settings = load_settings(budget=50_000)
print(settings.budget, settings.seed)
```
"""  # noqa: E501

from __future__ import annotations

import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from pathlib import Path

logger = logging.getLogger(__name__)

ENV_PREFIX = "NOVIKOV_"

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class SettingsError(Exception):
    pass


@dataclass(frozen=True)
class Settings:
    budget: int = 200_000
    """
    Reduction-step ceiling for one Gröbner basis computation.
    """

    seed: int = 20240601
    """
    Seed of the randomized property suites and of family sampling.
    """

    log_level: str = "WARNING"
    catalog_budget: int = 200_000
    """
    Reduction-step ceiling per decided pair during catalog verification.
    """

    sample_grid: tuple[str, ...] = ("-2", "-1", "-1/2", "0", "1/2", "1", "2")
    """
    Parameter values used by the catalog spot checks, as rational strings.
    """


def _dotenv_values(path: Path) -> dict[str, str]:
    if not path.is_file():
        return {}

    try:
        import dotenv
    except ImportError:
        logger.debug("dotenv is not installed; ignoring %s", path)
        return {}

    return {k: v for k, v in dotenv.dotenv_values(path).items() if v is not None}


def _positive_int(key: str, value: str) -> int:
    try:
        number = int(value)
    except ValueError as error:
        raise SettingsError(f"{key} must be an integer, got {value!r}") from error

    if number <= 0:
        raise SettingsError(f"{key} must be positive, got {number}")

    return number


def _convert(key: str, name: str, value: str) -> object:
    if name in ("budget", "catalog_budget"):
        return _positive_int(key, value)

    if name == "seed":
        try:
            return int(value)
        except ValueError as error:
            raise SettingsError(f"{key} must be an integer, got {value!r}") from error

    if name == "log_level":
        level = value.strip().upper()

        if level not in _LOG_LEVELS:
            raise SettingsError(f"{key} must be one of {', '.join(_LOG_LEVELS)}, got {value!r}")

        return level

    grid = tuple(v.strip() for v in value.split(",") if v.strip())

    for v in grid:
        try:
            Fraction(v)
        except ValueError as error:
            raise SettingsError(f"{key} holds a non-rational value {v!r}") from error

    if not grid:
        raise SettingsError(f"{key} must list at least one value")

    return grid


def load_settings(
    environ: Mapping[str, str] | None = None,
    env_file: str | Path = ".env",
    **overrides: object,
) -> Settings:
    """
    Merge the configuration sources. `None` overrides are ignored so that unset command-line flags
    fall through to the environment.

    Raises:
     - SettingsError: If a value cannot be converted; the message names the offending key.
    """
    environ = os.environ if environ is None else environ
    file_values = _dotenv_values(Path(env_file))
    settings = Settings()
    changes: dict[str, object] = {}

    for f in fields(Settings):
        key = ENV_PREFIX + f.name.upper()
        raw = environ.get(key, file_values.get(key))

        if raw is not None:
            changes[f.name] = _convert(key, f.name, raw)

    for name, value in overrides.items():
        if name not in {f.name for f in fields(Settings)}:
            raise SettingsError(f"Unknown setting {name!r}")

        if value is None:
            continue

        changes[name] = _convert(name, name, str(value)) if isinstance(value, str) else value

    settings = replace(settings, **changes)
    logger.debug("Settings: %s", settings)
    return settings
