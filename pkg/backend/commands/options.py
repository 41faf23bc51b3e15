"""
Options and error handling shared by every subcommand
"""

import functools
import json
import logging
from typing import Callable, Optional, Tuple

import click
from rich.console import Console
from rich.markup import escape

from services.errors import NumericalError, SpecError

from .specs import CurveSpec, LineSpec

logger = logging.getLogger("revolve.cli")

# Diagnostics go to stderr; stdout carries results only
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_SPEC_ERROR = 2
EXIT_NUMERICAL_ERROR = 3
EXIT_IO_ERROR = 4
EXIT_CHECK_FAILED = 5


def curve_options(command: Callable) -> Callable:
    """--parametric X Y | --graph F | --inverse-graph G with --from/--to and --line."""
    decorators = [
        click.option("--parametric", nargs=2, type=str, default=None, metavar="X Y",
                     help="Coordinate functions x(t) and y(t)."),
        click.option("--graph", type=str, default=None, metavar="F",
                     help="Graph y = f(x); write the variable as x or t."),
        click.option("--inverse-graph", "inverse_graph", type=str, default=None, metavar="G",
                     help="Graph x = g(y); write the variable as y or t."),
        click.option("--from", "t_from", type=float, required=True, help="Start of the parameter interval."),
        click.option("--to", "t_to", type=float, required=True, help="End of the parameter interval."),
        click.option("--line", "line_text", type=str, required=True,
                     help='Axis of revolution, e.g. "3x+4y=25" or "y=2x+1".'),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command


def json_option(command: Callable) -> Callable:
    return click.option("--json", "as_json", is_flag=True, help="Emit a JSON object instead of text.")(command)


def tolerance_options(command: Callable) -> Callable:
    command = click.option("--grid", type=click.IntRange(min=2), default=None,
                           help="Grid size for locating axis crossings.")(command)
    return click.option("--tol", type=click.FloatRange(min=0.0, min_open=True), default=None,
                        help="Relative tolerance of the area integral.")(command)


def mesh_options(command: Callable) -> Callable:
    command = click.option("--segments", type=click.IntRange(min=3), default=None,
                           help="Samples around the revolution.")(command)
    return click.option("--rings", type=click.IntRange(min=2), default=None,
                        help="Samples along the curve.")(command)


def build_specs(
    parametric: Optional[Tuple[str, str]],
    graph: Optional[str],
    inverse_graph: Optional[str],
    t_from: float,
    t_to: float,
    line_text: str,
) -> Tuple[CurveSpec, LineSpec]:
    chosen = [
        (mode, expressions)
        for mode, expressions in (
            ("parametric", parametric),
            ("graph", (graph,) if graph is not None else None),
            ("inverse-graph", (inverse_graph,) if inverse_graph is not None else None),
        )
        if expressions is not None
    ]
    if len(chosen) != 1:
        raise click.UsageError("give exactly one of --parametric, --graph or --inverse-graph")
    mode, expressions = chosen[0]
    curve_spec = CurveSpec(mode=mode, expressions=tuple(expressions), t0=t_from, t1=t_to)
    return curve_spec, LineSpec.parse(line_text)


def echo_json(payload: dict) -> None:
    click.echo(json.dumps(payload))


def handle_errors(command: Callable) -> Callable:
    """Translate revolve errors into documented exit codes with a message on stderr."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except SpecError as exc:
            err_console.print(f"[red]error:[/red] {escape(str(exc))}")
            raise click.exceptions.Exit(EXIT_SPEC_ERROR)
        except NumericalError as exc:
            err_console.print(f"[red]numerical failure:[/red] {escape(str(exc))}")
            raise click.exceptions.Exit(EXIT_NUMERICAL_ERROR)
        except OSError as exc:
            err_console.print(f"[red]i/o failure:[/red] {escape(str(exc))}")
            raise click.exceptions.Exit(EXIT_IO_ERROR)

    return wrapper
