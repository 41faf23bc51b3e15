"""
check subcommand - quadrature against the mesh oracle
"""

import click

from services.area_service import RevolutionService

from .options import (
    EXIT_CHECK_FAILED,
    build_specs,
    curve_options,
    echo_json,
    handle_errors,
    json_option,
    mesh_options,
    tolerance_options,
)


@click.command("check")
@curve_options
@mesh_options
@tolerance_options
@json_option
@click.pass_obj
@handle_errors
def check(service: RevolutionService, parametric, graph, inverse_graph, t_from, t_to, line_text,
          rings, segments, tol, grid, as_json):
    """Compare the integral with the area of an explicitly revolved mesh; exit 5 on disagreement."""
    curve_spec, line_spec = build_specs(parametric, graph, inverse_graph, t_from, t_to, line_text)
    rings = service.config.DEFAULT_RINGS if rings is None else rings
    segments = service.config.DEFAULT_SEGMENTS if segments is None else segments

    report = service.check_against_mesh(
        curve_spec.build(), line_spec.parsed, rings, segments, rel_tol=tol, grid_size=grid
    )
    if as_json:
        echo_json(report.model_dump(by_alias=True))
    else:
        click.echo(f"area: {report.area!r}")
        click.echo(f"mesh_area: {report.mesh_area!r}")
        click.echo(f"relative_difference: {report.relative_difference!r}")
        click.echo(f"allowance: {report.allowance!r}")
        click.echo(f"result: {'PASS' if report.passed else 'FAIL'}")
    if not report.passed:
        raise click.exceptions.Exit(EXIT_CHECK_FAILED)
