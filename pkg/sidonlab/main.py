"""Typer Application"""

import typer

from sidonlab.config import config
from sidonlab.router import register_commands
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)

logger.debug(
    "Configuration loaded: ENUMERATOR_TYPE=%s, SIDON_WORKERS=%s",
    config.ENUMERATOR_TYPE,
    config.SIDON_WORKERS,
)

app = typer.Typer(
    name="sidonlab",
    help="Sidon sets in F_2^t, their codes, and bounds on their size",
    no_args_is_help=True,
    add_completion=False,
)

register_commands(app)
