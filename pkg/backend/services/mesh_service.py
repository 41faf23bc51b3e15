"""
Mesh Service - revolve a sampled curve into a triangle mesh

The plane of the curve is embedded at z = 0 and every sample is turned about
the axis by rotating its signed offset through the plane spanned by the
normal v and e_z. The summed triangle area is an independent estimate of the
surface area; the mesh can be written as Wavefront OBJ or binary STL.
"""

import logging
import math
import struct
from dataclasses import dataclass
from typing import BinaryIO, Optional

import numpy as np

from config import settings
from models import Line, Point2, Point3

from .curve import ParametricCurve, sample_curve
from .geometry_service import decompose, frame_of

logger = logging.getLogger("revolve.mesh")

STL_HEADER_BYTES = 80
STL_TRIANGLE_DTYPE = np.dtype([
    ("normal", "<f4", (3,)),
    ("vertices", "<f4", (3, 3)),
    ("attribute", "<u2"),
])


@dataclass(frozen=True)
class Mesh:
    """
    Indexed triangle mesh.

    Revolved meshes are ring-major: vertex ring·segments + segment. rings and
    segments are 0 for meshes that were not built on a revolution grid.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    rings: int = 0
    segments: int = 0

    def __post_init__(self):
        if self.vertices.ndim != 2 or self.vertices.shape[1] != 3:
            raise ValueError(f"vertices must have shape (n, 3), got {self.vertices.shape}")
        if self.triangles.ndim != 2 or self.triangles.shape[1] != 3:
            raise ValueError(f"triangles must have shape (m, 3), got {self.triangles.shape}")
        if len(self.triangles):
            if self.triangles.min() < 0 or self.triangles.max() >= len(self.vertices):
                raise ValueError("triangle index out of range")
            t = self.triangles
            if np.any((t[:, 0] == t[:, 1]) | (t[:, 1] == t[:, 2]) | (t[:, 0] == t[:, 2])):
                raise ValueError("triangle repeats a vertex index")
        if self.rings and self.segments and len(self.vertices) != self.rings * self.segments:
            raise ValueError("revolved mesh must have rings·segments vertices")

    def vertex(self, index: int) -> Point3:
        x, y, z = self.vertices[index].tolist()
        return Point3(x=x, y=y, z=z)


def revolve_point(p: Point2, line: Line, theta: float) -> Point3:
    """
    Turn p about the line by theta.

    Returns foot + signed_offset·(cos θ·v + sin θ·e_z), so θ = 0 gives back p
    and θ = π mirrors it across the line.
    """
    parts = decompose(p, line)
    v = frame_of(line).normal
    radial = parts.signed_offset * math.cos(theta)
    return Point3(
        x=parts.foot.x + radial * v.x,
        y=parts.foot.y + radial * v.y,
        z=parts.signed_offset * math.sin(theta),
    )


def revolve_points(points: np.ndarray, line: Line, thetas: np.ndarray) -> np.ndarray:
    """Vectorized revolve_point: (n, 2) points and (s,) angles give (n, s, 3)."""
    frame = frame_of(line)
    norm = line.norm
    x, y = points[:, 0], points[:, 1]
    along = (-line.B * x + line.A * y) / norm
    offset = (line.A * x + line.B * y - line.C) / norm

    foot_x = frame.origin.x + along * frame.tangent.x
    foot_y = frame.origin.y + along * frame.tangent.y
    radial = offset[:, None] * np.cos(thetas)[None, :]

    revolved = np.empty((len(points), len(thetas), 3))
    revolved[..., 0] = foot_x[:, None] + radial * frame.normal.x
    revolved[..., 1] = foot_y[:, None] + radial * frame.normal.y
    revolved[..., 2] = offset[:, None] * np.sin(thetas)[None, :]
    return revolved


def grid_triangles(rings: int, segments: int) -> np.ndarray:
    """Two triangles per quad of a closed rings × segments grid, same winding everywhere."""
    dtype = np.int32 if rings * segments < 2**31 else np.int64
    ring = np.arange(rings - 1, dtype=dtype)[:, None]
    segment = np.arange(segments, dtype=dtype)[None, :]
    following = (segment + 1) % segments

    a = ring * segments + segment
    b = ring * segments + following
    c = (ring + 1) * segments + following
    d = (ring + 1) * segments + segment
    quads = np.stack([np.stack([a, b, c], axis=-1), np.stack([a, c, d], axis=-1)], axis=2)
    return quads.reshape(-1, 3)


def revolve_mesh(curve: ParametricCurve, line: Line, rings: int, segments: int) -> Mesh:
    """Sample rings parameters (endpoints included) and segments angles (no seam duplicate)."""
    if rings < 2:
        raise ValueError(f"rings must be at least 2 (got {rings})")
    if segments < 3:
        raise ValueError(f"segments must be at least 3 (got {segments})")
    _, points = sample_curve(curve, rings)
    thetas = np.arange(segments) * (2.0 * math.pi / segments)
    vertices = revolve_points(points, line, thetas).reshape(-1, 3)
    mesh = Mesh(vertices=vertices, triangles=grid_triangles(rings, segments), rings=rings, segments=segments)
    logger.debug(f"Revolved mesh: {len(mesh.vertices)} vertices, {len(mesh.triangles)} triangles")
    return mesh


def _triangle_cross(vertices: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    a = vertices[triangles[:, 0]]
    return np.cross(vertices[triangles[:, 1]] - a, vertices[triangles[:, 2]] - a)


def mesh_area(mesh: Mesh, chunk: Optional[int] = None) -> float:
    """Sum of ½‖(b - a) × (c - a)‖ over all triangles, in blocks of chunk triangles."""
    chunk = settings.MESH_AREA_CHUNK if chunk is None else chunk
    partials = []
    for start in range(0, len(mesh.triangles), chunk):
        cross = _triangle_cross(mesh.vertices, mesh.triangles[start:start + chunk])
        partials.append(0.5 * float(np.linalg.norm(cross, axis=1).sum()))
    return math.fsum(partials)


def export_obj(mesh: Mesh, sink: BinaryIO, chunk: int = 65536) -> None:
    """Wavefront OBJ: "v x y z" per vertex, then "f i j k" with 1-based indices."""
    for start in range(0, len(mesh.vertices), chunk):
        block = mesh.vertices[start:start + chunk].tolist()
        sink.write("".join(f"v {x!r} {y!r} {z!r}\n" for x, y, z in block).encode("ascii"))
    for start in range(0, len(mesh.triangles), chunk):
        block = (mesh.triangles[start:start + chunk] + 1).tolist()
        sink.write("".join(f"f {i} {j} {k}\n" for i, j, k in block).encode("ascii"))


def export_stl(mesh: Mesh, sink: BinaryIO) -> None:
    """Binary STL: zero header, little-endian count, then normal, corners and zero attribute."""
    records = np.zeros(len(mesh.triangles), dtype=STL_TRIANGLE_DTYPE)
    if len(mesh.triangles):
        cross = _triangle_cross(mesh.vertices, mesh.triangles)
        length = np.linalg.norm(cross, axis=1)
        normals = np.zeros_like(cross)
        nonzero = length > 0.0
        normals[nonzero] = cross[nonzero] / length[nonzero, None]
        records["normal"] = normals
        records["vertices"] = mesh.vertices[mesh.triangles]
    sink.write(bytes(STL_HEADER_BYTES))
    sink.write(struct.pack("<I", len(mesh.triangles)))
    sink.write(records.tobytes())
