import pathlib
import typing as t

import typer

from ..state import echo_report, get_state
from ...services import RegularityService


def command(
    ctx: typer.Context,
    operator: pathlib.Path = typer.Argument(..., help="QHA-MAT operator file"),
    tol: t.Optional[float] = typer.Option(None, "--tol"),
):
    """Support of the reflected Fourier-Wigner transform."""
    state = get_state(ctx)
    service = RegularityService(state.config)
    report = service.spectrum(operator, tol)
    echo_report(state, report, service.save(report, "spectrum.json"))
