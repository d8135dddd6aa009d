"""bounds command - upper bounds on the size of Sidon sets"""

import typer

from sidonlab.controllers.bounds_controller import BoundsController
from sidonlab.decorator.cli_errors import cli_errors


@cli_errors
def bounds(
    t_min: int = typer.Option(4, "--t-min", help="First dimension."),
    t_max: int = typer.Option(15, "--t-max", help="Last dimension."),
    cor19: bool = typer.Option(False, "--cor19", help="Print the nonexistent [n, n-t, 5] codes for t=16..26."),
    proof: bool = typer.Option(False, "--proof", help="Replay the case chain for every even t >= 6 in range."),
):
    """Print the bounds table as CSV"""

    controller = BoundsController()
    if cor19:
        typer.echo(controller.cor19_csv(), nl=False)
        return
    if proof:
        for report in controller.proofs(t_min, t_max):
            typer.echo(
                f"t={report.t} n={report.n_used} case={report.case_id.value} "
                f"steps={len(report.steps)} holds={'true' if report.inequality_holds else 'false'}"
            )
        return
    typer.echo(controller.table_csv(t_min, t_max), nl=False)
