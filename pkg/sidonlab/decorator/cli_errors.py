"""Map library exceptions to command exit codes"""

from functools import wraps

import typer

from sidonlab.exceptions import SidonLabException
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


def cli_errors(func):
    """Print the message on stderr and exit with the exception's exit code"""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SidonLabException as e:
            logger.debug("%s raised %s", func.__name__, type(e).__name__)
            typer.echo(f"error: {e}", err=True)
            raise typer.Exit(code=e.exit_code) from e
        except (FileNotFoundError, PermissionError) as e:
            typer.echo(f"error: {e}", err=True)
            raise typer.Exit(code=2) from e

    return wrapper
