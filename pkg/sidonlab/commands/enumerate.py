"""enumerate command - maximal Sidon sets containing the normalized base"""

import json
from pathlib import Path
from typing import Optional

import typer

from sidonlab.controllers.enumerate_controller import EnumerateController
from sidonlab.decorator.cli_errors import cli_errors
from sidonlab.models.enum_model import EnumResult
from sidonlab.utils.logger import setuplog

logger = setuplog(__name__)


def render_result(result: EnumResult) -> str:
    lines = [f"dim={result.dim}", f"family={result.family.value}"]
    if result.weight_class is not None:
        lines.append(f"weight_class={result.weight_class.value}")
    lines += [f"{size}: {count}" for size, count in result.size_histogram.items()]
    lines += [f"total={result.total}", f"nodes={result.nodes_visited}", f"tasks={result.tasks}"]
    # wall time stays on the last line, the rest is deterministic
    lines.append(f"wall_time={result.wall_time:.3f}")
    return "\n".join(lines)


@cli_errors
def enumerate_sets(
    dim: int = typer.Option(..., "--dim", "-t", help="Ambient dimension t."),
    weight_class: Optional[str] = typer.Option(None, "--weight-class", help="Dimension-8 subtask W4..W8."),
    workers: Optional[int] = typer.Option(None, "--workers", help="Worker processes (default SIDON_WORKERS or all cores)."),
    witnesses: Optional[Path] = typer.Option(None, "--witnesses", help="Write every maximal set to this file."),
    allow_long_run: bool = typer.Option(False, "--allow-long-run", help="Permit multi-day searches."),
    sum_free: bool = typer.Option(False, "--sum-free", help="Enumerate maximal sum-free Sidon sets instead."),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of key=value lines."),
    progress: bool = typer.Option(False, "--progress", help="Show a progress bar on stderr."),
):
    """Enumerate maximal Sidon sets and print their size histogram"""

    result = EnumerateController().run(
        dim,
        weight_class=weight_class,
        sum_free=sum_free,
        workers=workers,
        witnesses=witnesses,
        allow_long_run=allow_long_run,
        progress=progress,
    )
    if as_json:
        typer.echo(json.dumps(result.model_dump(mode="json"), indent=2))
    else:
        typer.echo(render_result(result))
