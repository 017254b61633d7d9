import importlib
import pathlib
import typing as t

import typer
from loguru import logger

from ..errors import with_error_handlers


def init_commands(app: typer.Typer) -> None:
    commands = get_commands(pathlib.Path(__file__).parent, __name__)
    logger.debug(f"commands {[name for name, _ in commands]}")
    for name, command in commands:
        app.command(name=name)(with_error_handlers(command))


def get_commands(directory: pathlib.Path, package: str) -> list[tuple[str, t.Callable]]:
    """Every ``command`` defined by a module of ``package``, named after the module."""
    commands = []
    for module in sorted(directory.iterdir()):
        if "__" == module.name[:2] or not module.match("*.py"):
            continue
        pymod = importlib.import_module(f"{package}.{module.stem}")
        if "command" in dir(pymod):
            commands.append((getattr(pymod, "NAME", module.stem), pymod.command))
    return commands
