import logging
import pathlib
import typing as t

import typer
from loguru import logger

from . import commands
from .errors import with_error_handlers
from .state import CliState
from ..core.app_settings import AppSettings, get_app_settings
from ..schemas import SuiteConfig


def create_app() -> typer.Typer:
    settings: AppSettings = get_app_settings()
    settings.configure_logging()

    app = typer.Typer(**settings.typer_kwargs)

    @app.callback()
    @with_error_handlers
    def root(
        ctx: typer.Context,
        config: t.Optional[pathlib.Path] = typer.Option(
            None, "--config", help="key = value suite configuration file"
        ),
        seed: t.Optional[int] = typer.Option(None, "--seed", help="base seed of every ensemble"),
        out: t.Optional[pathlib.Path] = typer.Option(None, "--out", help="output directory"),
        json_output: bool = typer.Option(False, "--json", help="print reports as JSON"),
        verbose: bool = typer.Option(False, "--verbose", "-v"),
    ):
        if verbose:
            settings.configure_logging(logging.DEBUG)
        overrides = {"seed": seed, "output_dir": out}
        if config is not None:
            suite = SuiteConfig.from_file(config, **overrides)
        else:
            suite = SuiteConfig(**{k: v for k, v in overrides.items() if v is not None})
        logger.debug(f"suite config {suite.model_dump()}")
        ctx.obj = CliState(config=suite, json_output=json_output)

    commands.init_commands(app)
    return app
