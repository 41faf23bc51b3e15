"""
area subcommand - surface area by adaptive quadrature
"""

import click

from services.area_service import RevolutionService

from .options import build_specs, curve_options, echo_json, handle_errors, json_option, tolerance_options


@click.command("area")
@curve_options
@tolerance_options
@json_option
@click.pass_obj
@handle_errors
def area(service: RevolutionService, parametric, graph, inverse_graph, t_from, t_to, line_text, tol, grid, as_json):
    """Area of the surface swept by revolving the curve about the line."""
    curve_spec, line_spec = build_specs(parametric, graph, inverse_graph, t_from, t_to, line_text)
    result = service.area(curve_spec.build(), line_spec.parsed, rel_tol=tol, grid_size=grid)

    if as_json:
        echo_json(result.report())
        return
    click.echo(f"area: {result.area!r}")
    click.echo(f"errorEstimate: {result.error_estimate!r}")
    click.echo(f"crossings: {', '.join(repr(t) for t in result.crossings) or 'none'}")
    click.echo(f"segments: {result.segments}")
