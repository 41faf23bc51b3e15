"""
Exception hierarchy for revolve

Every error carries the structured fields the CLI needs to build its message
and pick an exit code. None of them derive from ValueError, so they pass
through pydantic validators untouched.
"""

from typing import Optional


class RevolveError(Exception):
    """Base class for all revolve errors."""


class SpecError(RevolveError):
    """Malformed user input: expressions, lines, intervals."""


class NumericalError(RevolveError):
    """Failure while evaluating or integrating a well-formed input."""


class LexError(SpecError):
    def __init__(self, position: int, character: str):
        self.position = position
        self.character = character
        super().__init__(f"unexpected character {character!r} at offset {position}")


class ParseError(SpecError):
    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"expected {expected} at offset {position}")


class DiffError(SpecError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"cannot differentiate: {reason}")


class DegenerateLine(SpecError):
    def __init__(self, A: float, B: float, C: float):
        self.A, self.B, self.C = A, B, C
        super().__init__(f"A and B cannot both be zero (got A={A!r}, B={B!r}, C={C!r})")


class NonFiniteLine(SpecError):
    def __init__(self, A: float, B: float, C: float):
        self.A, self.B, self.C = A, B, C
        super().__init__(f"line coefficients must be finite (got A={A!r}, B={B!r}, C={C!r})")


class BadInterval(SpecError):
    def __init__(self, t0: float, t1: float):
        self.t0, self.t1 = t0, t1
        super().__init__(f"parameter interval must satisfy t0 < t1 (got [{t0!r}, {t1!r}])")


class LineSpecError(SpecError):
    def __init__(self, raw: str, reason: str):
        self.raw = raw
        self.reason = reason
        super().__init__(f"cannot parse line {raw!r}: {reason}")


class EvalError(NumericalError):
    def __init__(self, reason: str, t: Optional[float] = None):
        self.reason = reason
        self.t = t
        where = f" at t={t!r}" if t is not None else ""
        super().__init__(f"{reason}{where}")


class OutOfDomain(NumericalError):
    def __init__(self, t: float, t0: float, t1: float):
        self.t, self.t0, self.t1 = t, t0, t1
        super().__init__(f"t={t!r} lies outside [{t0!r}, {t1!r}]")


class MaxSubdivisions(NumericalError):
    """Adaptive quadrature ran out of its depth or interval budget."""

    def __init__(self, a: float, b: float, depth: int, segment: Optional[int] = None):
        self.a, self.b = a, b
        self.depth = depth
        self.segment = segment
        where = f" in segment {segment}" if segment is not None else ""
        super().__init__(
            f"subdivision budget exhausted on [{a!r}, {b!r}] at depth {depth}{where}; "
            "integrand is likely singular or non-smooth there"
        )

    def in_segment(self, segment: int) -> "MaxSubdivisions":
        return MaxSubdivisions(self.a, self.b, self.depth, segment)
