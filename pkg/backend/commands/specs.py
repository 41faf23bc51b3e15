"""
Curve and line specifications as typed on the command line
"""

import math
import re
from typing import Literal, Tuple

from pydantic import BaseModel, ConfigDict

from models import Line
from services.curve import ParametricCurve, from_graph, from_inverse_graph, make_curve
from services.errors import LineSpecError
from services.geometry_service import line_from_slope, make_line

CurveMode = Literal["parametric", "graph", "inverse-graph"]

# A linear term: optional sign, optional coefficient, optional '*', optional symbol
_TERM_REGEXP = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?P<coefficient>(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)?"
    r"(?P<star>\*)?"
    r"(?P<symbol>[xy])?"
)


def map_symbol(source: str, symbol: str) -> str:
    """Rename the user's graph variable to t, leaving names like exp untouched."""
    return re.sub(rf"\b{symbol}\b", "t", source)


class CurveSpec(BaseModel):
    """Exactly one of the three curve modes plus the parameter interval."""

    model_config = ConfigDict(frozen=True)

    mode: CurveMode
    expressions: Tuple[str, ...]
    t0: float
    t1: float

    def build(self) -> ParametricCurve:
        if self.mode == "parametric":
            x_source, y_source = self.expressions
            return make_curve(x_source, y_source, self.t0, self.t1)
        (source,) = self.expressions
        if self.mode == "graph":
            return from_graph(map_symbol(source, "x"), self.t0, self.t1)
        return from_inverse_graph(map_symbol(source, "y"), self.t0, self.t1)


def _linear_side(raw: str, text: str) -> Tuple[float, float, float]:
    """Coefficients (a, b, c) of one side written as a·x + b·y + c."""
    if not text:
        raise LineSpecError(raw, "one side of '=' is empty")
    totals = {"x": 0.0, "y": 0.0, "": 0.0}
    position = 0
    while position < len(text):
        match = _TERM_REGEXP.match(text, position)
        sign, coefficient, star, symbol = match.group("sign", "coefficient", "star", "symbol")
        if coefficient is None and symbol is None:
            raise LineSpecError(raw, f"unexpected {text[position]!r}")
        if position > 0 and not sign:
            raise LineSpecError(raw, "terms must be joined by '+' or '-'")
        if star and not (coefficient and symbol):
            raise LineSpecError(raw, "'*' must join a coefficient to x or y")
        value = float(coefficient) if coefficient else 1.0
        totals[symbol or ""] += -value if sign == "-" else value
        if not math.isfinite(totals[symbol or ""]):
            raise LineSpecError(raw, f"coefficient {match.group().lstrip('+-')!r} is not a finite number")
        position = match.end()
    return totals["x"], totals["y"], totals[""]


class LineSpec(BaseModel):
    """
    The --line text and the Line it denotes.

    Accepts linear forms such as "3x+4y=25", "x=0" or "2y=7" and the slope
    form "y = m*x + k", which maps to (A, B, C) = (-m, 1, k).
    """

    model_config = ConfigDict(frozen=True)

    raw: str
    parsed: Line

    @classmethod
    def parse(cls, raw: str) -> "LineSpec":
        text = "".join(raw.split())
        if text.count("=") != 1:
            raise LineSpecError(raw, "expected exactly one '='")
        left, right = text.split("=")
        right_x, right_y, right_c = _linear_side(raw, right)
        if left == "y" and right_y == 0.0 and "y" not in right:
            return cls(raw=raw, parsed=line_from_slope(right_x, right_c))
        left_x, left_y, left_c = _linear_side(raw, left)
        return cls(raw=raw, parsed=make_line(left_x - right_x, left_y - right_y, right_c - left_c))
