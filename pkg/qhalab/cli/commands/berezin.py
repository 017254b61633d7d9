import pathlib
import typing as t

import typer

from ..state import echo_report, get_state
from ...services import LocalizationService
from ...services.localization_service import DEFAULT_PS


def command(
    ctx: typer.Context,
    operator: pathlib.Path = typer.Argument(..., help="QHA-MAT operator"),
    phi1: pathlib.Path = typer.Option(..., "--phi1"),
    phi2: pathlib.Path = typer.Option(..., "--phi2"),
    p: t.List[float] = typer.Option(list(DEFAULT_PS), "--p"),
):
    """Berezin transform of an operator against a window pair."""
    state = get_state(ctx)
    service = LocalizationService(state.config)
    B, report = service.berezin(operator, phi1, phi2, p)
    service.save_function(B, "berezin.fun")
    echo_report(state, report, service.save(report, "berezin.json"))
