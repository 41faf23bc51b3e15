"""
mesh subcommand - export the revolved surface as OBJ or STL
"""

import logging

import click

from models import MeshReport
from services.area_service import RevolutionService
from services.mesh_service import export_obj, export_stl, mesh_area, revolve_mesh

from .options import build_specs, curve_options, echo_json, handle_errors, json_option, mesh_options

logger = logging.getLogger("revolve.cli")

EXPORTERS = {"obj": export_obj, "stl": export_stl}


@click.command("mesh")
@curve_options
@mesh_options
@click.option("--format", "mesh_format", type=click.Choice(sorted(EXPORTERS)), default="obj", show_default=True)
@click.option("--out", "out_path", type=click.Path(), required=True,
              help="File to write the mesh to.")
@json_option
@click.pass_obj
@handle_errors
def mesh(service: RevolutionService, parametric, graph, inverse_graph, t_from, t_to, line_text,
         rings, segments, mesh_format, out_path, as_json):
    """Write the revolved triangle mesh and print its total area."""
    curve_spec, line_spec = build_specs(parametric, graph, inverse_graph, t_from, t_to, line_text)
    rings = service.config.DEFAULT_RINGS if rings is None else rings
    segments = service.config.DEFAULT_SEGMENTS if segments is None else segments

    surface = revolve_mesh(curve_spec.build(), line_spec.parsed, rings, segments)
    with open(out_path, "wb") as sink:
        EXPORTERS[mesh_format](surface, sink)
    logger.info(f"💾 Wrote {len(surface.triangles)} triangles to {out_path}")

    report = MeshReport(
        path=str(out_path),
        format=mesh_format,
        vertices=len(surface.vertices),
        triangles=len(surface.triangles),
        rings=rings,
        segments=segments,
        mesh_area=mesh_area(surface, chunk=service.config.MESH_AREA_CHUNK),
    )
    if as_json:
        echo_json(report.model_dump())
        return
    click.echo(f"mesh_area: {report.mesh_area!r}")
