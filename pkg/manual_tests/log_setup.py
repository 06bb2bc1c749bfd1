import inspect
import logging
import os
import pathlib
import sys
import tempfile
from collections.abc import Mapping

from rich.console import Console
from rich.logging import RichHandler


def get_logger(
    name: str,
    log_path: str,
    level: int = logging.INFO,
) -> logging.Logger:
    """
    Logger for a check script: rich output on stderr plus a fresh plain-text file at `log_path`.
    The package loggers (`novikov_groebner.*`) propagate to the same handlers.
    """
    log_directory: pathlib.Path = pathlib.Path(log_path).parent

    os.makedirs(log_directory, exist_ok=True)
    open(log_path, "w").close()

    file_handler = logging.FileHandler(log_path)
    file_handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))

    logger = logging.getLogger(name)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[
            RichHandler(console=Console(stderr=True), show_path=False),
            file_handler,
        ],
    )

    return logger


def run_checks(namespace: Mapping[str, object], logger: logging.Logger) -> None:
    """
    Run every `test_*` function of a check script outside pytest and exit non-zero on failure.
    A `tmp_path` argument receives a fresh temporary directory.
    """
    failed = []

    for name, function in list(namespace.items()):
        if not name.startswith("test_") or not callable(function):
            continue

        kwargs = {}

        if "tmp_path" in inspect.signature(function).parameters:
            kwargs["tmp_path"] = pathlib.Path(tempfile.mkdtemp(prefix="novikov-"))

        try:
            function(**kwargs)
        except Exception:
            logger.exception(f"{name} failed")
            failed.append(name)
        else:
            logger.info(f"{name} passed")

    if failed:
        logger.error(f"{len(failed)} checks failed: {', '.join(failed)}")
        sys.exit(1)
