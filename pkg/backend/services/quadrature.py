"""
Quadrature Service - adaptive Gauss-Kronrod integration and crossing detection

integrate() applies the 7-point Gauss / 15-point Kronrod pair and keeps
bisecting whichever subinterval currently has the largest error estimate
until the summed estimate meets the tolerance. The per-interval estimate
uses the QUADPACK scaling of |K15 - G7|.
"""

import heapq
import logging
import math
from typing import Callable, List, Optional, Tuple

import numpy as np

from config import settings
from models import QuadratureResult

from .errors import MaxSubdivisions
from .tolerance_config import ToleranceConfig

logger = logging.getLogger("revolve.quadrature")

RealFunction = Callable[[float], float]

# Kronrod abscissae on [0, 1]; odd positions are the Gauss nodes
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
# Gauss weights for _XGK[1], _XGK[3], _XGK[5], _XGK[7]
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_EPMACH = np.finfo(float).eps
_UFLOW = np.finfo(float).tiny
# Lowest usable rel_tol: twice the per-interval round-off bound 50·eps·∫|f|
MIN_REL_TOL = 100.0 * _EPMACH

# Full symmetric rule on [-1, 1]: nodes, Kronrod weights, Gauss weights
RULE_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
RULE_KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS_FULL = np.zeros(8)
_GAUSS_FULL[1::2] = _WG
RULE_GAUSS_WEIGHTS = np.concatenate([_GAUSS_FULL[:-1], _GAUSS_FULL[::-1]])

# Exact for polynomials up to this degree
KRONROD_DEGREE = 22


def gauss_kronrod_15(f: RealFunction, a: float, b: float) -> Tuple[float, float]:
    """Integral of f over [a, b] and its error estimate from one rule application."""
    center = 0.5 * (a + b)
    half_length = 0.5 * (b - a)
    values = np.array([f(center + half_length * x) for x in RULE_NODES])

    result_kronrod = float(RULE_KRONROD_WEIGHTS @ values)
    result_gauss = float(RULE_GAUSS_WEIGHTS @ values)
    mean = 0.5 * result_kronrod
    result_abs = float(RULE_KRONROD_WEIGHTS @ np.abs(values)) * abs(half_length)
    result_asc = float(RULE_KRONROD_WEIGHTS @ np.abs(values - mean)) * abs(half_length)

    error = abs((result_kronrod - result_gauss) * half_length)
    if result_asc != 0.0 and error != 0.0:
        error = result_asc * min(1.0, (200.0 * error / result_asc) ** 1.5)
    if result_abs > _UFLOW / (50.0 * _EPMACH):
        error = max(_EPMACH * 50.0 * result_abs, error)
    return result_kronrod * half_length, error


def integrate(
    f: RealFunction,
    a: float,
    b: float,
    rel_tol: Optional[float] = None,
    abs_tol: Optional[float] = None,
    max_depth: Optional[int] = None,
    max_intervals: Optional[int] = None,
) -> QuadratureResult:
    """
    Adaptive integral of f over [a, b].

    Converged when the summed error estimate is at most
    max(abs_tol, rel_tol·|value|); a rel_tol below MIN_REL_TOL is raised to
    it. Raises MaxSubdivisions when an interval that still needs splitting is
    max_depth bisections deep or when the partition would exceed max_intervals.
    EvalError from f propagates.
    """
    rel_tol = settings.REL_TOL if rel_tol is None else rel_tol
    abs_tol = settings.ABS_TOL if abs_tol is None else abs_tol
    max_depth = settings.MAX_DEPTH if max_depth is None else max_depth
    max_intervals = settings.MAX_INTERVALS if max_intervals is None else max_intervals
    if not a <= b:
        raise ValueError(f"integration bounds must satisfy a <= b (got [{a!r}, {b!r}])")
    if rel_tol < MIN_REL_TOL:
        logger.debug(f"Relative tolerance {rel_tol!r} is below round-off; using {MIN_REL_TOL!r}")
        rel_tol = MIN_REL_TOL
    rule_size = ToleranceConfig.rule_size()

    value, error = gauss_kronrod_15(f, a, b)
    evaluations = rule_size
    # heap entries: (-error, sequence, a, b, value, error, depth)
    heap = [(-error, 0, a, b, value, error, 0)]
    sequence = 1

    while True:
        total = math.fsum(entry[4] for entry in heap)
        total_error = math.fsum(entry[5] for entry in heap)
        if total_error <= max(abs_tol, rel_tol * abs(total)):
            break

        _, _, left, right, _, _, depth = heapq.heappop(heap)
        middle = 0.5 * (left + right)
        if depth >= max_depth or len(heap) + 2 > max_intervals or not left < middle < right:
            logger.warning(
                f"Subdivision budget exhausted on [{left!r}, {right!r}] "
                f"(depth {depth}, {len(heap) + 1} intervals, error {total_error:.3e})"
            )
            raise MaxSubdivisions(left, right, depth)

        for lo, hi in ((left, middle), (middle, right)):
            part, part_error = gauss_kronrod_15(f, lo, hi)
            heapq.heappush(heap, (-part_error, sequence, lo, hi, part, part_error, depth + 1))
            sequence += 1
        evaluations += 2 * rule_size

    # fixed left-to-right summation order keeps the result reproducible
    ordered = sorted(heap, key=lambda entry: entry[2])
    value = math.fsum(entry[4] for entry in ordered)
    error = math.fsum(entry[5] for entry in ordered)
    logger.debug(
        f"∫[{a!r}, {b!r}] = {value!r} ± {error:.3e} "
        f"({len(ordered)} intervals, {evaluations} evaluations)"
    )
    return QuadratureResult(value=value, error_estimate=error, evaluations=evaluations, intervals=len(ordered))


def _bisect(g: RealFunction, lo: float, hi: float, g_lo: float, width: float) -> float:
    iterations = ToleranceConfig.QUADRATURE_CONFIG["bisection_max_iterations"]
    for _ in range(iterations):
        if hi - lo <= width:
            break
        middle = 0.5 * (lo + hi)
        if not lo < middle < hi:
            break
        g_middle = g(middle)
        if g_middle == 0.0:
            return middle
        if (g_middle < 0.0) == (g_lo < 0.0):
            lo, g_lo = middle, g_middle
        else:
            hi = middle
    return 0.5 * (lo + hi)


def find_sign_changes(
    g: RealFunction,
    a: float,
    b: float,
    grid_size: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> List[float]:
    """
    Parameters in (a, b) where g changes sign strictly.

    g is sampled on grid_size uniform points; each bracket with opposite signs
    is refined by bisection to width tolerance·(1 + |a| + |b|). A grid sample
    that is exactly zero between samples of opposite sign is returned as is.
    Touching zero without changing sign is not a crossing.
    """
    grid_size = settings.SIGN_CHANGE_GRID if grid_size is None else grid_size
    tolerance = settings.BISECTION_TOL if tolerance is None else tolerance
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2 (got {grid_size})")
    width = tolerance * (1.0 + abs(a) + abs(b))

    grid = np.linspace(a, b, grid_size).tolist()
    values = [g(t) for t in grid]

    roots: List[float] = []
    last_index: Optional[int] = None  # last sample with nonzero value
    for index, value in enumerate(values):
        if value == 0.0:
            continue
        if last_index is not None and (value < 0.0) != (values[last_index] < 0.0):
            if index == last_index + 1:
                root = _bisect(g, grid[last_index], grid[index], values[last_index], width)
            else:
                # first exact zero of the run between the opposite-sign samples
                root = grid[last_index + 1]
            if a < root < b and (not roots or root > roots[-1]):
                roots.append(root)
        last_index = index

    logger.debug(f"Sign changes on [{a!r}, {b!r}] with grid {grid_size}: {roots}")
    return roots
