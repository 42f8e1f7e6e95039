"""
Audit report models aggregating orbits, error series and crossings.
"""

from datetime import datetime, timezone
from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .orbit import FixedOrbit, MapParameters, ReferenceBackend, ReferenceOrbit
from .series import CrossingResult, ErrorSeries, LowerBoundCertificate


class EnvironmentRecord(BaseModel):
    """Settings that fully determine a report."""

    tool_version: str
    number_format: str = Field("IEEE-754 binary64", description="Fixed-precision format")
    rounding: str = Field("round-half-even", description="Rounding mode for every operation")
    fused_multiply_add: bool = Field(False, description="Whether the kernel may fuse operations")
    reference_backend: ReferenceBackend = ReferenceBackend.DECIMAL
    reference_digits: int = Field(..., ge=50)
    export_digits: int = Field(30, ge=1, description="Reference digits written to exports")
    threshold: str = Field(..., description="Shadowing distance as given")

    model_config = ConfigDict(frozen=True)


class AuditReport(BaseModel):
    """Complete result of one G/H/P audit run."""

    params: MapParameters
    orbit_g: FixedOrbit
    orbit_h: FixedOrbit
    reference: ReferenceOrbit
    lower_bound: ErrorSeries
    deviation_g: ErrorSeries
    deviation_h: ErrorSeries
    crossings: Dict[str, CrossingResult] = Field(..., description="Keyed lower_bound, deviation_G, deviation_H")
    certificate: LowerBoundCertificate
    first_divergence: Optional[int] = Field(None, description="First index where G and H differ")
    environment: EnvironmentRecord

    # Not exported
    generated_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_lengths(self) -> "AuditReport":
        expected = self.params.length
        for name in ("orbit_g", "orbit_h", "reference", "lower_bound", "deviation_g", "deviation_h"):
            if len(getattr(self, name)) != expected:
                raise ValueError(f"{name} length {len(getattr(self, name))} != {expected}")
        return self

    @property
    def series(self) -> Dict[str, ErrorSeries]:
        return {
            "lower_bound": self.lower_bound,
            "deviation_G": self.deviation_g,
            "deviation_H": self.deviation_h,
        }


class HeadlineComparison(BaseModel):
    """A measured log10 error next to its published value."""

    name: str
    iterate: int
    position: int
    measured_log10: float
    published_log10: float
    tolerance: float = 0.001

    @property
    def within_tolerance(self) -> bool:
        return abs(self.measured_log10 - self.published_log10) <= self.tolerance
