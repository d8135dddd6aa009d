"""verify command - reproduction suite"""

from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from sidonlab.controllers.verify_controller import VerifyController
from sidonlab.decorator.cli_errors import cli_errors
from sidonlab.models.verify_model import VerifyLevel, VerifyStatus

_STYLES = {VerifyStatus.PASS: "green", VerifyStatus.FAIL: "bold red", VerifyStatus.SKIPPED: "yellow"}


@cli_errors
def verify(
    level: VerifyLevel = typer.Option(VerifyLevel.FAST, "--level", help="fast, or full with the t=7 enumeration."),
    workers: Optional[int] = typer.Option(None, "--workers", help="Workers for the t=7 enumeration."),
):
    """Run the reproduction checks; exit 1 if any fails"""

    outcomes = VerifyController(workers=workers).run(level)

    table = Table(title=f"sidonlab verify ({level.value})")
    table.add_column("check")
    table.add_column("status")
    table.add_column("expected", overflow="fold")
    table.add_column("actual", overflow="fold")
    table.add_column("s", justify="right")
    for outcome in outcomes:
        style = _STYLES[outcome.status]
        table.add_row(
            outcome.check_name,
            f"[{style}]{outcome.status.value}[/{style}]",
            outcome.expected,
            outcome.actual,
            f"{outcome.seconds:.2f}",
        )
    Console().print(table)

    if any(o.status is VerifyStatus.FAIL for o in outcomes):
        raise typer.Exit(code=1)
