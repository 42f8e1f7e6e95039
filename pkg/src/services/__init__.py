"""
Services package for the orbit audit.

This package contains the computation services (fixed-precision kernel,
reference engine, error analysis, report assembly) and the output services
(CSV/JSON exporters, SVG plots).
"""

from .report_builder import AuditReportBuilder, reproduce_paper

__all__ = ['AuditReportBuilder', 'reproduce_paper']
