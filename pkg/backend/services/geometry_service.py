"""
Geometry Service - the axis line and its orthonormal frame
Decomposes plane points into a foot on the line plus a signed normal offset
"""

import logging
import math

from models import Decomposition, Frame, Line, Point2

from .tolerance_config import ToleranceConfig

logger = logging.getLogger("revolve.geometry")


def make_line(A: float, B: float, C: float) -> Line:
    """Line A·x + B·y = C; raises DegenerateLine when A = B = 0."""
    return Line(A=A, B=B, C=C)


def line_from_slope(m: float, k: float) -> Line:
    """y = m·x + k written as (A, B, C) = (-m, 1, k)."""
    return Line(A=-m, B=1.0, C=k)


def frame_of(line: Line) -> Frame:
    """
    Origin O, tangent u and normal v for the line.

    O = (A·C, B·C) / (A² + B²) lies on the line, u = (-B, A) / √(A² + B²)
    runs along it and v = (A, B) / √(A² + B²) is perpendicular. The
    coefficients are not canonicalised, so scaling the line by a negative
    factor flips u and v.
    """
    A, B, C = line.A, line.B, line.C
    norm = line.norm
    a, b = A / norm, B / norm
    # O = (C / norm) · v keeps large coefficients from overflowing A² + B²
    offset = C / norm
    frame = Frame(
        origin=Point2(x=offset * a, y=offset * b),
        tangent=Point2(x=-b, y=a),
        normal=Point2(x=a, y=b),
    )
    _verify_frame(frame, line)
    return frame


def _verify_frame(frame: Frame, line: Line) -> None:
    unit = ToleranceConfig.unit_tolerance()
    u, v, o = frame.tangent, frame.normal, frame.origin
    if (
        abs(math.hypot(u.x, u.y) - 1.0) > unit
        or abs(math.hypot(v.x, v.y) - 1.0) > unit
        or abs(u.x * v.x + u.y * v.y) > unit
    ):
        logger.warning(f"Frame of {line} is not orthonormal within {unit}")
    if abs(line.residual(o.x, o.y)) > ToleranceConfig.line_membership_bound(line.C):
        logger.warning(f"Frame origin {o} is off {line}")


def decompose(p: Point2, line: Line) -> Decomposition:
    """Split p into foot + signed_offset·v with the foot on the line."""
    frame = frame_of(line)
    norm = line.norm
    along = (-line.B * p.x + line.A * p.y) / norm
    signed_offset = line.residual(p.x, p.y) / norm
    foot = Point2(
        x=frame.origin.x + along * frame.tangent.x,
        y=frame.origin.y + along * frame.tangent.y,
    )
    return Decomposition(along=along, signed_offset=signed_offset, foot=foot)


def signed_offset(x: float, y: float, line: Line) -> float:
    """Signed distance of (x, y) from the line, positive on the side v points to."""
    return line.residual(x, y) / line.norm


def distance_to_line(p: Point2, line: Line) -> float:
    """|A·x + B·y - C| / √(A² + B²)."""
    return abs(signed_offset(p.x, p.y, line))


def torus_phase(line: Line) -> float:
    """The angle t₀ with cos t₀ = A/√(A²+B²) and sin t₀ = B/√(A²+B²)."""
    return math.atan2(line.B, line.A)
