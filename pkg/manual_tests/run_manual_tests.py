"""
Runs the check scripts one after another, each in its own interpreter, and prints a panel per
script followed by a timing table.

    python -m manual_tests.run_manual_tests              # every script
    python -m manual_tests.run_manual_tests iso catalog  # check_iso.py and check_catalog.py
"""

import asyncio
import dataclasses
import subprocess
import sys
import time
from pathlib import Path

from rich.console import Console
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

import manual_tests.log_setup as log_setup

logger = log_setup.get_logger(__name__, "logs/run_manual_tests.log")
console = Console()

PACKAGE_ROOT = Path(__file__).parent.parent

# Cheap modules first; the catalog and command line checks compute many bases.
MANUAL_TESTS = [
    "check_poly.py",
    "check_linalg.py",
    "check_groebner.py",
    "check_algebra.py",
    "check_variety.py",
    "check_iso.py",
    "check_formats.py",
    "check_settings.py",
    "validate_json.py",
    "check_catalog.py",
    "check_cli.py",
]


@dataclasses.dataclass(slots=True)
class CheckOutcome:
    script: str
    returncode: int | None
    seconds: float
    stdout: str = ""
    stderr: str = ""
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.returncode == 0


def select_scripts(names: list[str]) -> list[str]:
    """
    Scripts matching `names` (`iso`, `check_iso` or `check_iso.py`), in run order; all when empty.
    """
    if not names:
        return list(MANUAL_TESTS)

    wanted = {Path(n).stem.removeprefix("check_") for n in names}
    chosen = [s for s in MANUAL_TESTS if Path(s).stem.removeprefix("check_") in wanted]
    unknown = wanted - {Path(s).stem.removeprefix("check_") for s in chosen}

    if unknown:
        raise SystemExit(f"unknown check scripts: {', '.join(sorted(unknown))}")

    return chosen


async def run_check(script: str) -> CheckOutcome:
    started = time.perf_counter()

    try:
        process = await asyncio.create_subprocess_exec(
            sys.executable,
            "-m",
            f"manual_tests.{Path(script).stem}",
            cwd=PACKAGE_ROOT,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
        )
        stdout, stderr = await process.communicate()
    except OSError as e:
        return CheckOutcome(script, None, time.perf_counter() - started, error=str(e))

    return CheckOutcome(
        script,
        process.returncode,
        time.perf_counter() - started,
        stdout.decode(errors="replace"),
        stderr.decode(errors="replace"),
    )


def outcome_panel(outcome: CheckOutcome, position: str) -> Panel:
    if outcome.error is not None:
        body = f"[red]{outcome.error}[/red]"
    else:
        parts = []
        if outcome.stdout:
            parts.append(f"[white]stdout:[/white]\n{outcome.stdout}")
        if outcome.stderr:
            parts.append(f"[yellow]stderr:[/yellow]\n{outcome.stderr}")
        body = "\n".join(parts) or "No output"

    return Panel(
        body,
        title=f"{position}: {outcome.script}",
        title_align="left",
        subtitle=f"{outcome.seconds:.1f}s",
        subtitle_align="right",
        border_style="green" if outcome.passed else "red",
        padding=(1, 2),
    )


def summary_table(outcomes: list[CheckOutcome]) -> Table:
    table = Table(title="Check summary")
    table.add_column("script")
    table.add_column("result")
    table.add_column("seconds", justify="right")

    for outcome in outcomes:
        result = "[green]passed[/green]" if outcome.passed else "[red]failed[/red]"
        table.add_row(outcome.script, result, f"{outcome.seconds:.1f}")

    return table


async def run_tests(scripts: list[str]) -> int:
    outcomes: list[CheckOutcome] = []

    console.print("\n[bold cyan]Novikov Groebner Manual Tests[/bold cyan]\n")

    with Progress(SpinnerColumn(), TextColumn("{task.description}"), console=console) as progress:
        for i, script in enumerate(scripts, 1):
            task_id = progress.add_task(f"Running {script}...", total=None)
            logger.info(f"Running {script}")
            outcome = await run_check(script)
            progress.remove_task(task_id)

            if outcome.passed:
                logger.info(f"{script} passed in {outcome.seconds:.1f}s")
            elif outcome.error is not None:
                logger.error(f"{script} could not start: {outcome.error}")
            else:
                logger.error(f"{script} failed with return code {outcome.returncode}:\n{outcome.stderr}")  # noqa: E501

            outcomes.append(outcome)
            console.print(outcome_panel(outcome, f"{i}/{len(scripts)}"))

    passed = sum(o.passed for o in outcomes)
    console.print(summary_table(outcomes))
    style = "green" if passed == len(outcomes) else "red"
    console.print(f"[bold {style}]{passed}/{len(outcomes)} scripts passed[/bold {style}]")

    return 0 if passed == len(outcomes) else 1


if __name__ == "__main__":
    sys.exit(asyncio.run(run_tests(select_scripts(sys.argv[1:]))))
