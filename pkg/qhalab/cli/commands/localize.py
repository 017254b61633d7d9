import pathlib
import typing as t

import typer

from ..state import echo_report, get_state
from ...services import LocalizationService
from ...services.localization_service import DEFAULT_PS


def command(
    ctx: typer.Context,
    symbol: pathlib.Path = typer.Argument(..., help="QHA-FUN symbol"),
    phi1: pathlib.Path = typer.Option(..., "--phi1", help="QHA-SIG analysis window"),
    phi2: pathlib.Path = typer.Option(..., "--phi2", help="QHA-SIG synthesis window"),
    p: t.List[float] = typer.Option(list(DEFAULT_PS), "--p", help="Schatten exponents"),
):
    """Localization operator of a symbol; writes the matrix and a Schatten report."""
    state = get_state(ctx)
    service = LocalizationService(state.config)
    A, report = service.localize(symbol, phi1, phi2, p)
    service.save_operator(A, "localization.mat")
    echo_report(state, report, service.save(report, "localization.json"))
