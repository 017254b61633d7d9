import pathlib
import typing as t

import typer

from ..state import echo_report, get_state
from ...core.exceptions import ConfigError
from ...services import RegularityService


def command(
    ctx: typer.Context,
    operator: t.Optional[pathlib.Path] = typer.Argument(None, help="QHA-MAT operator file"),
    phi1: t.Optional[pathlib.Path] = typer.Option(None, "--phi1", help="QHA-SIG window"),
    phi2: t.Optional[pathlib.Path] = typer.Option(None, "--phi2", help="QHA-SIG window"),
    random_windows: t.Optional[int] = typer.Option(
        None, "--random-windows", help="draw both windows at random for this N"
    ),
    tol: t.Optional[float] = typer.Option(None, "--tol", help="relative zero-set tolerance"),
):
    """Zero set of the Fourier-Wigner transform and the translate-span rank law.

    Give an operator file, or a window pair (--phi1/--phi2 or --random-windows)
    to check the density of the localization operators they generate.
    """
    state = get_state(ctx)
    service = RegularityService(state.config)
    windows = phi1 is not None or phi2 is not None or random_windows is not None

    if operator is not None and not windows:
        report = service.for_operator(operator, tol)
    elif operator is None and random_windows is not None and phi1 is None and phi2 is None:
        report, amb = service.for_windows(*service.windows(random_n=random_windows), tol=tol)
        service.save_heatmap(amb, "ambiguity.csv")
    elif operator is None and phi1 is not None and phi2 is not None and random_windows is None:
        report, amb = service.for_windows(*service.windows(phi1, phi2), tol=tol)
        service.save_heatmap(amb, "ambiguity.csv")
    else:
        raise ConfigError(
            "give exactly one of: an operator file, --phi1 with --phi2, or --random-windows"
        )
    echo_report(state, report, service.save(report, "regularity.json"))
