"""
Export document schemas.

This package contains Pydantic models for the JSON files written by the
exporters, versioned by SCHEMA_VERSION.
"""

from .report_document import (
    SCHEMA_VERSION,
    ParamsBlock,
    EnvironmentBlock,
    CrossingBlock,
    SeriesBlock,
    CertificateBlock,
    OrbitDocument,
    AuditDocument
)

__all__ = [
    "SCHEMA_VERSION",
    "ParamsBlock",
    "EnvironmentBlock",
    "CrossingBlock",
    "SeriesBlock",
    "CertificateBlock",
    "OrbitDocument",
    "AuditDocument"
]
