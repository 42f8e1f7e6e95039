"""
Error types raised by the orbit audit models and services.
"""

import math
from typing import Optional


class OrbitAuditError(Exception):
    """Base class for all orbit audit failures."""


class NumeralParseError(OrbitAuditError, ValueError):
    """A decimal numeral could not be parsed into an exact rational."""

    def __init__(self, text: str, reason: str = "not a finite decimal numeral"):
        self.text = text
        self.reason = reason
        super().__init__(f"Invalid numeral {text!r}: {reason}")


class OrbitEscapeError(OrbitAuditError):
    """A pseudo-orbit produced a non-finite or out-of-[0,1] value."""

    def __init__(self, iterate: int, value: float, form: Optional[str] = None):
        self.iterate = iterate
        self.value = value
        self.form = form
        kind = "out-of-range" if math.isfinite(value) else "non-finite"
        label = f" (form {form})" if form else ""
        super().__init__(f"Orbit{label} produced {kind} value {value!r} at iterate {iterate}")


class OrbitMismatchError(OrbitAuditError, ValueError):
    """Two orbits cannot be compared (different lengths or parameters)."""


class PrecisionConfigError(OrbitAuditError, ValueError):
    """Requested working precision is below the supported minimum."""


class InsufficientDataError(OrbitAuditError, ValueError):
    """Not enough iterates to draw a figure."""


class ExportError(OrbitAuditError, OSError):
    """Writing an export target failed; the target may hold partial output."""
