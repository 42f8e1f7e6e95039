"""
Run configuration for the command-line workflows.
"""

from enum import Enum
from pathlib import Path
from typing import List

from pydantic import BaseModel, Field, field_validator, model_validator

from .orbit import MIN_REFERENCE_DIGITS, EvaluationFormId, MapParameters, ReferenceBackend
from .validation import MapParameterValidator, ValidationResult


class OutputFormat(str, Enum):
    """Output file formats."""
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


class RunConfig(BaseModel):
    """Effective settings for simulate, audit and reproduce-paper."""

    r: str = Field("3.8", description="Map parameter (decimal string)")
    x0: str = Field("0.4", description="Initial condition (decimal string)")
    iterates: int = Field(100, description="Number of map applications")
    digits: int = Field(1000, description="Reference precision in decimal digits")
    threshold: str = Field("1e-8", description="Shadowing distance (decimal string)")
    forms: List[EvaluationFormId] = Field(
        default_factory=lambda: [EvaluationFormId.G, EvaluationFormId.H],
        description="Evaluation forms to iterate"
    )
    output_dir: Path = Field(Path("orbit-audit-output"), description="Directory for written files")
    formats: List[OutputFormat] = Field(
        default_factory=lambda: [OutputFormat.CSV, OutputFormat.JSON],
        description="Requested output formats"
    )
    backend: ReferenceBackend = Field(ReferenceBackend.DECIMAL, description="Reference arithmetic engine")
    export_digits: int = Field(30, ge=1, description="Reference digits written to CSV/JSON")

    @field_validator("forms", "formats")
    @classmethod
    def dedupe_sorted(cls, v):
        """Keep one entry per value in a stable order."""
        return sorted(set(v), key=lambda item: item.value)

    @model_validator(mode="after")
    def check_constraints(self) -> "RunConfig":
        result = ValidationResult(True)
        # map parameter warnings are logged when the MapParameters are built
        for error in MapParameterValidator.validate_map_parameters(self.r, self.x0, self.iterates).errors:
            result.add_error(error)
        result.merge(MapParameterValidator.validate_threshold(self.threshold))

        if self.digits < MIN_REFERENCE_DIGITS:
            result.add_error(f"digits must be >= {MIN_REFERENCE_DIGITS}, got {self.digits}")
        if not self.forms:
            result.add_error("at least one evaluation form is required")
        if not self.formats:
            result.add_error("at least one output format is required")

        result.raise_if_invalid()
        return self

    def to_map_parameters(self) -> MapParameters:
        return MapParameters(r=self.r, x0=self.x0, iterates=self.iterates)

    def wants(self, fmt: OutputFormat) -> bool:
        return fmt in self.formats
