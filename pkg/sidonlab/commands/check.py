"""check command - additive profile and associated code of sets"""

import json
from pathlib import Path
from typing import List, Optional

import typer

from sidonlab.controllers.check_controller import CheckController
from sidonlab.decorator.cli_errors import cli_errors
from sidonlab.exceptions import ValidationError
from sidonlab.models.sidon_model import SetCheck
from sidonlab.models.vector_model import PointSet
from sidonlab.utils.logger import setuplog
from sidonlab.utils.utils import SetFormat, format_set

logger = setuplog(__name__)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def render_check(result: SetCheck, dim: int, fmt: SetFormat) -> List[str]:
    report = result.report
    lines = [
        f"elements={format_set(PointSet(dim=dim, elements=result.elements), fmt)}",
        f"size={report.size}",
        f"is_sidon={_bool(report.is_sidon)}",
        f"is_sum_free={_bool(report.is_sum_free)}",
        f"is_maximal_sidon={_bool(report.is_maximal_sidon)}",
        f"two_star_sums={report.two_star_count}",
        f"three_sums={report.three_sum_count}",
        f"extension_candidates={report.candidate_count}",
    ]
    if result.code is not None:
        record = result.code.to_record()
        lines += [f"n={record['n']}", f"k={record['k']}", f"d_class={record['d_class']}"]
        if "R" in record:
            lines.append(f"R={record['R']}")
    return lines


@cli_errors
def check(
    dim: int = typer.Option(..., "--dim", "-t", help="Ambient dimension t."),
    set_literal: Optional[str] = typer.Option(None, "--set", help="Decimal elements, e.g. \"0,1,2,4,7\"."),
    file: Optional[Path] = typer.Option(None, "--file", help="Witness file, one set per line."),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of key=value lines."),
    fmt: str = typer.Option("decimal", "--format", help="Element format: decimal or bits."),
):
    """Analyze a set: Sidon, sum-free, maximality and its associated code"""

    if (set_literal is None) == (file is None):
        raise ValidationError("give exactly one of --set and --file")
    if fmt not in ("decimal", "bits"):
        raise ValidationError(f"unknown format {fmt!r}, expected decimal or bits")

    controller = CheckController()
    if set_literal is not None:
        results = controller.check_literal(dim, set_literal)
    else:
        results = controller.check_file(dim, file)

    if as_json:
        typer.echo(json.dumps([r.model_dump(mode="json") for r in results], indent=2))
        return
    blocks = ["\n".join(render_check(r, dim, fmt)) for r in results]  # type: ignore[arg-type]
    typer.echo("\n\n".join(blocks))
