"""
Pydantic models for revolve
These models define the values passed between services and the shape of the
CLI's JSON reports
"""

import math
from typing import List

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from services.errors import DegenerateLine, NonFiniteLine


class Line(BaseModel):
    """The axis of revolution A·x + B·y = C."""

    model_config = ConfigDict(frozen=True)

    A: float
    B: float
    C: float

    @model_validator(mode="after")
    def _check_not_degenerate(self) -> "Line":
        if not all(math.isfinite(value) for value in (self.A, self.B, self.C)):
            raise NonFiniteLine(self.A, self.B, self.C)
        if self.A == 0.0 and self.B == 0.0:
            raise DegenerateLine(self.A, self.B, self.C)
        return self

    @property
    def norm(self) -> float:
        """√(A² + B²), computed without overflow."""
        return math.hypot(self.A, self.B)

    def residual(self, x: float, y: float) -> float:
        """A·x + B·y - C; zero exactly on the line."""
        return self.A * x + self.B * y - self.C


class Point2(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float = Field(..., allow_inf_nan=False)
    y: float = Field(..., allow_inf_nan=False)


class Point3(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float = Field(..., allow_inf_nan=False)
    y: float = Field(..., allow_inf_nan=False)
    z: float = Field(..., allow_inf_nan=False)


class Frame(BaseModel):
    """Origin O on the line with unit tangent u and unit normal v."""

    model_config = ConfigDict(frozen=True)

    origin: Point2
    tangent: Point2
    normal: Point2


class Decomposition(BaseModel):
    """A point split into its foot on the line plus a signed normal offset."""

    model_config = ConfigDict(frozen=True)

    along: float = Field(..., description="Signed coordinate along the tangent u")
    signed_offset: float = Field(..., description="Signed coordinate along the normal v")
    foot: Point2 = Field(..., description="Orthogonal projection onto the line")


class QuadratureResult(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    value: float
    error_estimate: float = Field(..., ge=0.0, alias="errorEstimate")
    evaluations: int = Field(..., ge=0)
    intervals: int = Field(default=1, ge=1, description="Subintervals in the final partition")


class AreaResult(BaseModel):
    """Area of a surface of revolution plus how it was assembled."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    area: float = Field(..., ge=0.0)
    error_estimate: float = Field(..., ge=0.0, alias="errorEstimate")
    crossings: List[float] = Field(default_factory=list)
    segments: int = Field(..., ge=1)

    @field_validator("crossings")
    @classmethod
    def _strictly_increasing(cls, crossings: List[float]) -> List[float]:
        if any(b <= a for a, b in zip(crossings, crossings[1:])):
            raise ValueError("crossings must be strictly increasing")
        return crossings

    @model_validator(mode="after")
    def _segments_match_crossings(self) -> "AreaResult":
        if self.segments != len(self.crossings) + 1:
            raise ValueError("segments must equal len(crossings) + 1")
        return self

    def report(self) -> dict:
        """JSON-ready dict with the public key names."""
        return self.model_dump(by_alias=True)


class TableRow(BaseModel):
    """One sample of the area integrand, as written by the table command."""

    t: float
    x: float
    y: float
    r: float
    arc_speed: float
    integrand: float

    @classmethod
    def header(cls) -> List[str]:
        return list(cls.model_fields)

    def values(self) -> List[float]:
        return [getattr(self, name) for name in self.header()]


class MeshReport(BaseModel):
    """Summary printed by the mesh command."""

    path: str
    format: str
    vertices: int
    triangles: int
    rings: int
    segments: int
    mesh_area: float


class CheckReport(BaseModel):
    """Quadrature area against the mesh oracle."""

    model_config = ConfigDict(populate_by_name=True)

    area: float
    error_estimate: float = Field(..., alias="errorEstimate")
    mesh_area: float
    coarse_mesh_area: float
    relative_difference: float
    allowance: float
    rings: int
    segments: int
    crossings: List[float] = Field(default_factory=list)
    passed: bool
