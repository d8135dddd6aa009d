"""Central Command Registration"""

import typer

from sidonlab.commands.bounds import bounds
from sidonlab.commands.check import check
from sidonlab.commands.enumerate import enumerate_sets
from sidonlab.commands.verify import verify


def register_commands(app: typer.Typer):
    """Register all commands to the typer application"""

    app.command(name="check")(check)
    app.command(name="enumerate")(enumerate_sets)
    app.command(name="bounds")(bounds)
    app.command(name="verify")(verify)
