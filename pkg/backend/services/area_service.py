"""
Area Service - surface area of a parametric curve revolved about a line

The area is 2π ∫ r(t)·√(x'(t)² + y'(t)²) dt with r(t) the distance from
(x(t), y(t)) to the axis. r(t) has a kink wherever the curve crosses the
axis, so the parameter interval is split at every crossing first and each
smooth piece is integrated on its own.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from config import Settings, settings
from models import AreaResult, CheckReport, Line, QuadratureResult

from .curve import ParametricCurve, arc_speed, eval_point, from_graph
from .errors import MaxSubdivisions
from .expression import Expr
from .geometry_service import distance_to_line, line_from_slope, make_line
from .mesh_service import mesh_area, revolve_mesh
from .quadrature import find_sign_changes, integrate
from .tolerance_config import ToleranceConfig

logger = logging.getLogger("revolve.area")

TWO_PI = 2.0 * math.pi
X_AXIS = make_line(0.0, 1.0, 0.0)
Y_AXIS = make_line(1.0, 0.0, 0.0)


def area_integrand(curve: ParametricCurve, line: Line, t: float) -> float:
    """2π·r(t)·arc_speed(t), the area swept per unit parameter at t."""
    return TWO_PI * distance_to_line(eval_point(curve, t), line) * arc_speed(curve, t)


def axis_crossings(curve: ParametricCurve, line: Line, grid_size: Optional[int] = None) -> List[float]:
    """Parameters where A·x(t) + B·y(t) - C changes sign."""

    def residual(t: float) -> float:
        return line.residual(curve.x.evaluate(t), curve.y.evaluate(t))

    return find_sign_changes(residual, curve.t0, curve.t1, grid_size)


def _integrate_segments(
    curve: ParametricCurve,
    line: Line,
    bounds: List[Tuple[float, float]],
    rel_tol: float,
    config: Settings,
) -> List[QuadratureResult]:
    def integrate_segment(index: int) -> QuadratureResult:
        lo, hi = bounds[index]
        try:
            return integrate(
                lambda t: area_integrand(curve, line, t),
                lo,
                hi,
                rel_tol=rel_tol,
                abs_tol=config.ABS_TOL,
                max_depth=config.MAX_DEPTH,
                max_intervals=config.MAX_INTERVALS,
            )
        except MaxSubdivisions as exc:
            raise exc.in_segment(index) from exc

    indices = range(len(bounds))
    if config.PARALLEL_SEGMENTS and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=config.MAX_WORKERS) as pool:
            # map preserves input order, so the sum below stays deterministic
            return list(pool.map(integrate_segment, indices))
    return [integrate_segment(index) for index in indices]


def surface_area(
    curve: ParametricCurve,
    line: Line,
    rel_tol: Optional[float] = None,
    grid_size: Optional[int] = None,
    config: Settings = settings,
) -> AreaResult:
    """
    Area of the surface swept by revolving the curve about the line.

    A curve that crosses the axis contributes from both sides, so overlapping
    sweeps are counted with multiplicity, exactly as the integral does.
    """
    rel_tol = config.REL_TOL if rel_tol is None else rel_tol
    grid_size = config.SIGN_CHANGE_GRID if grid_size is None else grid_size

    crossings = axis_crossings(curve, line, grid_size)
    breakpoints = [curve.t0, *crossings, curve.t1]
    bounds = list(zip(breakpoints, breakpoints[1:]))
    if crossings:
        logger.debug(f"Curve crosses {line} at t = {crossings}; integrating {len(bounds)} segments")

    parts = _integrate_segments(curve, line, bounds, rel_tol, config)
    area = math.fsum(part.value for part in parts)
    error = math.fsum(part.error_estimate for part in parts)
    return AreaResult(
        area=max(area, 0.0),
        error_estimate=error,
        crossings=crossings,
        segments=len(bounds),
    )


def surface_area_x_axis(curve: ParametricCurve, rel_tol: Optional[float] = None) -> AreaResult:
    return surface_area(curve, X_AXIS, rel_tol)


def surface_area_y_axis(curve: ParametricCurve, rel_tol: Optional[float] = None) -> AreaResult:
    return surface_area(curve, Y_AXIS, rel_tol)


def surface_area_graph_slant(
    f_source: str,
    a: float,
    b: float,
    m: float,
    k: float,
    rel_tol: Optional[float] = None,
) -> AreaResult:
    """Graph of y = f(x) on [a, b] revolved about y = m·x + k."""
    return surface_area(from_graph(f_source, a, b), line_from_slope(m, k), rel_tol)


def graph_slant_integrand(f: Expr, df: Expr, m: float, k: float, x: float) -> float:
    """2π·|f(x) - m·x - k|·√((1 + f'(x)²) / (1 + m²)), written out directly."""
    fx = f.evaluate(x)
    slope = df.evaluate(x)
    return TWO_PI * abs(fx - m * x - k) * math.sqrt((1.0 + slope * slope) / (1.0 + m * m))


# ────────────────────────────────────────────────────────────────────────────
# Closed forms for the golden shapes
# ────────────────────────────────────────────────────────────────────────────

def torus_area(R: float, r: float) -> float:
    """Circle of radius r whose center is R from the axis, R > r."""
    return 4.0 * math.pi**2 * R * r


def sphere_area(radius: float) -> float:
    return 4.0 * math.pi * radius**2


def cone_lateral_area(radius: float, slant: float) -> float:
    return math.pi * radius * slant


def cylinder_area(radius: float, length: float) -> float:
    return TWO_PI * radius * length


# ────────────────────────────────────────────────────────────────────────────
# Service facade
# ────────────────────────────────────────────────────────────────────────────

class RevolutionService:
    """Area, mesh and oracle check with tolerances taken from settings."""

    def __init__(self, config: Settings = settings):
        self.config = config

    def area(
        self,
        curve: ParametricCurve,
        line: Line,
        rel_tol: Optional[float] = None,
        grid_size: Optional[int] = None,
    ) -> AreaResult:
        result = surface_area(curve, line, rel_tol, grid_size, config=self.config)
        logger.info(
            f"Area of {curve} about {line}: {result.area!r} ± {result.error_estimate:.3e} "
            f"({result.segments} segments)"
        )
        return result

    def check_against_mesh(
        self,
        curve: ParametricCurve,
        line: Line,
        rings: int,
        segments: int,
        rel_tol: Optional[float] = None,
        grid_size: Optional[int] = None,
    ) -> CheckReport:
        """
        Compare the quadrature area with the triangle-mesh oracle.

        The allowance is the change in mesh area between half resolution and the
        requested one; for second-order convergence that bounds the remaining
        mesh error with room to spare.
        """
        result = self.area(curve, line, rel_tol, grid_size)
        fine = mesh_area(revolve_mesh(curve, line, rings, segments), chunk=self.config.MESH_AREA_CHUNK)

        check = ToleranceConfig.get_config("check")
        half_rings = max(check["minimum_half_rings"], rings // 2)
        half_segments = max(check["minimum_half_segments"], segments // 2)
        coarse = mesh_area(
            revolve_mesh(curve, line, half_rings, half_segments),
            chunk=self.config.MESH_AREA_CHUNK,
        )

        scale = max(abs(result.area), abs(fine))
        if scale == 0.0:
            relative_difference = 0.0
            convergence_allowance = 0.0
        else:
            relative_difference = abs(result.area - fine) / scale
            convergence_allowance = abs(fine - coarse) / scale
        allowance = max(self.config.CHECK_MIN_ALLOWANCE, convergence_allowance)
        passed = relative_difference <= allowance
        if not passed:
            logger.warning(
                f"Mesh oracle disagrees: quadrature {result.area!r}, mesh {fine!r} "
                f"(relative difference {relative_difference:.3e} > {allowance:.3e})"
            )
        return CheckReport(
            area=result.area,
            error_estimate=result.error_estimate,
            mesh_area=fine,
            coarse_mesh_area=coarse,
            relative_difference=relative_difference,
            allowance=allowance,
            rings=rings,
            segments=segments,
            crossings=result.crossings,
            passed=passed,
        )
