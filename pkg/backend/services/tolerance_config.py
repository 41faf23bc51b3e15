"""
Tolerance Configuration

Thresholds used by the geometry, expression and quadrature services and by the
mesh check. Kept in one place so they are easy to find and tune.
"""

from typing import Any, Dict


class ToleranceConfig:
    """Class-level tolerance tables with small accessors."""

    # ============================================================================
    # FRAME / LINE GEOMETRY
    # ============================================================================

    FRAME_CONFIG = {
        "unit_vector_tolerance": 1e-12,  # |‖u‖-1|, |‖v‖-1|, |u·v|
        "line_membership_tolerance": 1e-9,  # scaled by (1 + |C|)
        "reconstruction_tolerance": 1e-9,  # per coordinate
    }

    # ============================================================================
    # EXPRESSIONS
    # ============================================================================

    EXPRESSION_CONFIG = {
        "abs_kink_message": "abs is not differentiable at 0",
    }

    # ============================================================================
    # QUADRATURE
    # ============================================================================

    QUADRATURE_CONFIG = {
        "rule_size": 15,  # Kronrod nodes per application
        "bisection_max_iterations": 200,
    }

    # ============================================================================
    # MESH ORACLE CHECK
    # ============================================================================

    CHECK_CONFIG = {
        "minimum_half_rings": 2,
        "minimum_half_segments": 3,
    }

    @classmethod
    def get_config(cls, category: str) -> Dict[str, Any]:
        """Get the table for a category, empty if unknown."""
        config_map = {
            "frame": cls.FRAME_CONFIG,
            "expression": cls.EXPRESSION_CONFIG,
            "quadrature": cls.QUADRATURE_CONFIG,
            "check": cls.CHECK_CONFIG,
        }
        return config_map.get(category, {})

    @classmethod
    def line_membership_bound(cls, C: float) -> float:
        """Allowed |A·x + B·y - C| for a point that should lie on the line."""
        return cls.FRAME_CONFIG["line_membership_tolerance"] * (1.0 + abs(C))

    @classmethod
    def unit_tolerance(cls) -> float:
        return cls.FRAME_CONFIG["unit_vector_tolerance"]

    @classmethod
    def rule_size(cls) -> int:
        return cls.QUADRATURE_CONFIG["rule_size"]
