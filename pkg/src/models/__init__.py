"""
Core data models for the orbit audit.

This package contains Pydantic models for map parameters, evaluation forms,
pseudo-orbits, reference orbits, error series and reports, plus numeral
validation and the error types.
"""

from .errors import (
    OrbitAuditError,
    NumeralParseError,
    OrbitEscapeError,
    OrbitMismatchError,
    PrecisionConfigError,
    InsufficientDataError,
    ExportError
)

from .orbit import (
    MIN_REFERENCE_DIGITS,
    EvaluationFormId,
    ReferenceBackend,
    MapParameters,
    EvaluationForm,
    EVALUATION_FORMS,
    FixedOrbit,
    ReferenceOrbit,
    get_form,
    orbit_position,
    index_for_position
)

from .series import (
    ErrorSeriesKind,
    ErrorSeries,
    CrossingResult,
    LowerBoundCertificate
)

from .report import (
    EnvironmentRecord,
    AuditReport,
    HeadlineComparison
)

from .run_config import (
    OutputFormat,
    RunConfig
)

from .validation import (
    ValidationResult,
    MapParameterValidator,
    parse_exact_rational
)

__all__ = [
    # Errors
    "OrbitAuditError",
    "NumeralParseError",
    "OrbitEscapeError",
    "OrbitMismatchError",
    "PrecisionConfigError",
    "InsufficientDataError",
    "ExportError",

    # Orbit models
    "MIN_REFERENCE_DIGITS",
    "EvaluationFormId",
    "ReferenceBackend",
    "MapParameters",
    "EvaluationForm",
    "EVALUATION_FORMS",
    "FixedOrbit",
    "ReferenceOrbit",
    "get_form",
    "orbit_position",
    "index_for_position",

    # Series models
    "ErrorSeriesKind",
    "ErrorSeries",
    "CrossingResult",
    "LowerBoundCertificate",

    # Reports and configuration
    "EnvironmentRecord",
    "AuditReport",
    "HeadlineComparison",
    "OutputFormat",
    "RunConfig",

    # Validation
    "ValidationResult",
    "MapParameterValidator",
    "parse_exact_rational"
]
