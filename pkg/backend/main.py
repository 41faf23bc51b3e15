#!/usr/bin/env python3
"""
revolve: surface areas of revolution about an arbitrary line
Command-line entry point
"""

import logging

import click
from rich.console import Console
from rich.logging import RichHandler

from commands import COMMANDS
from config import settings
from services.area_service import RevolutionService

# Logs go to stderr so stdout stays machine-readable
console = Console(stderr=True)

logger = logging.getLogger("revolve")


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose or settings.DEBUG else settings.LOG_LEVEL.upper()
    logging.basicConfig(
        level=level,
        format=settings.LOG_FORMAT,
        handlers=[
            RichHandler(
                console=console,
                rich_tracebacks=True,
                show_path=False,
                show_time=True,
                markup=False,
            )
        ],
        force=True,
    )


@click.group(name=settings.APP_NAME)
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_NAME)
@click.option("--verbose", "-v", is_flag=True, help="Log debug details to stderr.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool):
    """Area of the surface generated by revolving a plane curve about the line Ax + By = C."""
    configure_logging(verbose)
    ctx.obj = RevolutionService(settings)
    logger.debug(f"🚀 {settings.APP_NAME} {settings.APP_VERSION} starting")


for command in COMMANDS:
    cli.add_command(command)


if __name__ == "__main__":
    cli()
