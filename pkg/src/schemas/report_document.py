"""
JSON document schemas for exported orbits and audit reports.

Numbers whose exact value matters are carried as strings: binary64 values
in 17-significant-digit form (round-trip exact) and reference values as
decimal strings rounded to the configured export digits.
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = "1.0"


class ParamsBlock(BaseModel):
    """Map parameters as exact decimal strings."""

    r: str
    x0: str
    iterates: int


class EnvironmentBlock(BaseModel):
    """Settings that determine the exported numbers."""

    tool_version: str
    number_format: str
    rounding: str
    fused_multiply_add: bool
    reference_backend: Optional[str] = None
    reference_digits: Optional[int] = None
    export_digits: Optional[int] = None
    threshold: Optional[str] = None


class CrossingBlock(BaseModel):
    """First threshold crossing of one series."""

    threshold: str = Field(..., description="Threshold text as configured")
    iterate: Optional[int] = Field(None, description="First index with delta >= threshold")
    delta_at_crossing: Optional[str] = Field(None, description="binary64 delta, 17 significant digits")


class SeriesBlock(BaseModel):
    """Error series and their log10 transforms (null for log10 of zero)."""

    lower_bound: List[str]
    deviation_G: List[str]
    deviation_H: List[str]
    log10_lower_bound: List[Optional[str]]
    log10_deviation_G: List[Optional[str]]
    log10_deviation_H: List[Optional[str]]


class CertificateBlock(BaseModel):
    """Lower-bound certificate summary."""

    holds_everywhere: bool
    violations: List[int]


class OrbitDocument(BaseModel):
    """Output of the simulate workflow."""

    schema_version: Literal["1.0"] = SCHEMA_VERSION
    params: ParamsBlock
    environment: EnvironmentBlock
    orbits: Dict[str, List[str]] = Field(..., description="Form id -> binary64 iterates")


class AuditDocument(BaseModel):
    """Output of the audit and reproduce-paper workflows."""

    schema_version: Literal["1.0"] = SCHEMA_VERSION
    params: ParamsBlock
    environment: EnvironmentBlock
    orbits: Dict[str, List[str]] = Field(..., description="G, H (binary64) and P (reference)")
    series: SeriesBlock
    crossings: Dict[str, CrossingBlock]
    certificate: CertificateBlock
    first_divergence: Optional[int] = None
