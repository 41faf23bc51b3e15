"""
Parametric curves (x(t), y(t)) on [t0, t1] with cached symbolic derivatives
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from models import Point2

from .errors import BadInterval, OutOfDomain
from .expression import Expr, differentiate, expression_to_text, parse_expression

logger = logging.getLogger("revolve.curve")


@dataclass(frozen=True)
class ParametricCurve:
    """A curve and its derivatives. Build it with make_curve, never by hand."""

    x: Expr
    y: Expr
    dx: Expr
    dy: Expr
    t0: float
    t1: float

    def __str__(self) -> str:
        return (
            f"({expression_to_text(self.x)}, {expression_to_text(self.y)}) "
            f"for t in [{self.t0!r}, {self.t1!r}]"
        )


def _check_interval(t0: float, t1: float) -> None:
    if not (math.isfinite(t0) and math.isfinite(t1)) or not t0 < t1:
        raise BadInterval(t0, t1)


def curve_from_expressions(x: Expr, y: Expr, t0: float, t1: float) -> ParametricCurve:
    _check_interval(t0, t1)
    # abs is differentiated piecewise; the kink itself surfaces as an EvalError
    return ParametricCurve(
        x=x,
        y=y,
        dx=differentiate(x, piecewise_abs=True),
        dy=differentiate(y, piecewise_abs=True),
        t0=float(t0),
        t1=float(t1),
    )


def make_curve(x_source: str, y_source: str, t0: float, t1: float) -> ParametricCurve:
    """Parse both coordinate functions and cache their derivatives."""
    return curve_from_expressions(parse_expression(x_source), parse_expression(y_source), t0, t1)


def from_graph(f_source: str, a: float, b: float) -> ParametricCurve:
    """The graph y = f(x) on [a, b] as x(t) = t, y(t) = f(t)."""
    return make_curve("t", f_source, a, b)


def from_inverse_graph(g_source: str, c: float, d: float) -> ParametricCurve:
    """The graph x = g(y) on [c, d] as x(t) = g(t), y(t) = t."""
    return make_curve(g_source, "t", c, d)


def eval_point(curve: ParametricCurve, t: float) -> Point2:
    if not curve.t0 <= t <= curve.t1:
        raise OutOfDomain(t, curve.t0, curve.t1)
    return Point2(x=curve.x.evaluate(t), y=curve.y.evaluate(t))


def velocity(curve: ParametricCurve, t: float) -> Tuple[float, float]:
    """(x'(t), y'(t))."""
    if not curve.t0 <= t <= curve.t1:
        raise OutOfDomain(t, curve.t0, curve.t1)
    return curve.dx.evaluate(t), curve.dy.evaluate(t)


def arc_speed(curve: ParametricCurve, t: float) -> float:
    """√(x'(t)² + y'(t)²), so that ds = arc_speed·dt."""
    return math.hypot(*velocity(curve, t))


def sample_curve(curve: ParametricCurve, count: int) -> Tuple[List[float], np.ndarray]:
    """count uniform parameters including both endpoints, and the (count, 2) points."""
    ts = np.linspace(curve.t0, curve.t1, count).tolist()
    points = np.array([(curve.x.evaluate(t), curve.y.evaluate(t)) for t in ts], dtype=float)
    logger.debug(f"Sampled {count} points on {curve}")
    return ts, points.reshape(count, 2)
