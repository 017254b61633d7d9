import typing as t

import typer

from ..state import echo_summary, exit_on_failures, get_state
from ...core.exceptions import ConfigError
from ...services import VerifyService
from ...services.finite_checks import FINITE_CHECKS


def command(
    ctx: typer.Context,
    check: t.Optional[t.List[str]] = typer.Option(
        None, "--check", help="run only the named check; repeatable"
    ),
):
    """Run the finite-model identity checks for every N in n_list."""
    state = get_state(ctx)
    known = {c.name for c in FINITE_CHECKS}
    unknown = sorted(set(check or ()) - known)
    if unknown:
        raise ConfigError(f"unknown checks {unknown}; known: {sorted(known)}")

    service = VerifyService(state.config)
    summary = service.run(check)
    echo_summary(state, summary, service.save(summary, "verify.json"))
    exit_on_failures(summary)
