import typer

from ..state import echo_summary, exit_on_failures, get_state
from ...services import ContinuumService


def command(ctx: typer.Context):
    """Sampled-line checks, plus STFT and Fourier-Wigner planes of the Gaussian."""
    state = get_state(ctx)
    service = ContinuumService(state.config)
    summary = service.run()
    for name, plane in service.gaussian_planes().items():
        service.save_heatmap(plane, f"{name}.csv")
        service.save_plane(plane, f"{name}.fun")
    echo_summary(state, summary, service.save(summary, "continuum.json"))
    exit_on_failures(summary)
