"""
Error series models: lower-bound and deviation series, threshold crossings
and the per-iterate lower-bound certificate.
"""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .validation import parse_exact_rational


class ErrorSeriesKind(str, Enum):
    """What an error series measures."""
    LOWER_BOUND = "lower_bound"
    DEVIATION = "deviation"


class ErrorSeries(BaseModel):
    """Per-iterate error values between one or two orbits."""

    kind: ErrorSeriesKind
    values: Tuple[float, ...] = Field(..., description="Nonnegative binary64 delta per iterate")
    sources: Tuple[str, ...] = Field(..., min_length=1, max_length=2, description="Labels of the compared orbits")

    model_config = ConfigDict(frozen=True)

    @field_validator("values")
    @classmethod
    def check_nonnegative(cls, v):
        for n, value in enumerate(v):
            if not value >= 0.0:
                raise ValueError(f"error value at iterate {n} is negative or NaN: {value!r}")
        return v

    @property
    def name(self) -> str:
        if self.kind == ErrorSeriesKind.LOWER_BOUND:
            return "lower_bound"
        return f"deviation_{self.sources[0]}"

    def __len__(self) -> int:
        return len(self.values)


class CrossingResult(BaseModel):
    """First iterate at which a series meets a threshold."""

    threshold: str = Field(..., description="Shadowing distance as given, e.g. '1e-8'")
    iterate: Optional[int] = Field(None, ge=0, description="First index with value >= threshold")
    delta_at_crossing: Optional[float] = Field(None, description="Series value at the crossing")

    model_config = ConfigDict(frozen=True)

    @field_validator("threshold")
    @classmethod
    def check_threshold(cls, v):
        if parse_exact_rational(v) <= 0:
            raise ValueError("threshold must be > 0")
        return v

    @model_validator(mode="after")
    def check_pairing(self) -> "CrossingResult":
        if (self.iterate is None) != (self.delta_at_crossing is None):
            raise ValueError("iterate and delta_at_crossing must be given together")
        return self

    @property
    def threshold_value(self) -> float:
        return float(parse_exact_rational(self.threshold))

    @property
    def crossed(self) -> bool:
        return self.iterate is not None


class LowerBoundCertificate(BaseModel):
    """Per-iterate check that one pseudo-orbit is at least delta_alpha from the reference."""

    holds: Tuple[bool, ...]
    sources: Tuple[str, str, str]

    model_config = ConfigDict(frozen=True)

    @property
    def violations(self) -> Tuple[int, ...]:
        return tuple(n for n, ok in enumerate(self.holds) if not ok)

    @property
    def all_hold(self) -> bool:
        return all(self.holds)
