import pathlib

import typer

from ..schemas import BaseSchema, CheckSummary, SuiteConfig


class CliState(BaseSchema):
    """Options shared by every command, set by the root callback."""

    config: SuiteConfig
    json_output: bool = False

    @property
    def output_dir(self) -> pathlib.Path:
        return self.config.output_dir


def get_state(ctx: typer.Context) -> CliState:
    state = ctx.find_root().obj
    if not isinstance(state, CliState):
        state = CliState(config=SuiteConfig())
        ctx.find_root().obj = state
    return state


def echo_report(state: CliState, report: BaseSchema, path: pathlib.Path | None = None) -> None:
    if state.json_output:
        typer.echo(report.model_dump_json(indent=2))
    elif path is not None:
        typer.echo(f"report: {path}")


def echo_summary(state: CliState, summary: CheckSummary, path: pathlib.Path) -> None:
    if state.json_output:
        typer.echo(summary.model_dump_json(indent=2))
        return
    width = max(len(r.name) for r in summary.results) if summary.results else 4
    typer.echo(f"{'check':<{width}}  {'status':<11}  {'measured':>11}  {'threshold':>9}  runtime")
    for r in summary.results:
        threshold = "-" if r.threshold is None else f"{r.threshold:.1e}"
        typer.echo(
            f"{r.name:<{width}}  {r.status:<11}  {r.measured:>11.3e}  {threshold:>9}  {r.runtime:.2f}s"
        )
    failed = summary.failed
    typer.echo(f"{len(summary.results)} checks, {len(failed)} failed, seed {summary.seed}")
    typer.echo(f"report: {path}")


def exit_on_failures(summary: CheckSummary) -> None:
    if summary.failed:
        raise typer.Exit(code=1)

