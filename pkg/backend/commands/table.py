"""
table subcommand - CSV samples of the area integrand for plotting
"""

import csv
import sys

import click

from models import Point2, TableRow
from services.area_service import RevolutionService, area_integrand
from services.curve import ParametricCurve, arc_speed, sample_curve
from services.geometry_service import distance_to_line

from .options import build_specs, curve_options, handle_errors


def integrand_rows(curve: ParametricCurve, line, samples: int):
    ts, points = sample_curve(curve, samples)
    for t, (x, y) in zip(ts, points.tolist()):
        yield TableRow(
            t=t,
            x=x,
            y=y,
            r=distance_to_line(Point2(x=x, y=y), line),
            arc_speed=arc_speed(curve, t),
            integrand=area_integrand(curve, line, t),
        )


@click.command("table")
@curve_options
@click.option("--samples", type=click.IntRange(min=2), default=None, help="Number of uniform samples.")
@click.pass_obj
@handle_errors
def table(service: RevolutionService, parametric, graph, inverse_graph, t_from, t_to, line_text, samples):
    """CSV with columns t,x,y,r,arc_speed,integrand."""
    curve_spec, line_spec = build_specs(parametric, graph, inverse_graph, t_from, t_to, line_text)
    samples = service.config.TABLE_SAMPLES if samples is None else samples
    curve = curve_spec.build()

    # rows are computed before writing so a failure leaves stdout empty
    rows = list(integrand_rows(curve, line_spec.parsed, samples))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(TableRow.header())
    for row in rows:
        writer.writerow([repr(value) for value in row.values()])
