"""
CSV and JSON exporters for orbits and audit reports.

CSV layout: comma separated, "." decimal point, LF line endings, one header
row then one row per iterate. binary64 values use 17 significant digits so
that parsing reproduces them bit-exactly; log10 of a zero delta is written
as an empty field.
"""

import csv
import logging
import math
from decimal import ROUND_HALF_EVEN, Context, Decimal
from typing import Dict, List, Optional, Sequence, TextIO

try:
    from .. import __version__
    from ..models.errors import ExportError
    from ..models.orbit import FixedOrbit
    from ..models.report import AuditReport
    from ..schemas.report_document import (
        AuditDocument, CertificateBlock, CrossingBlock, EnvironmentBlock,
        OrbitDocument, ParamsBlock, SeriesBlock
    )
    from .error_analysis import log10_series
except ImportError:
    from src import __version__
    from models.errors import ExportError
    from models.orbit import FixedOrbit
    from models.report import AuditReport
    from schemas.report_document import (
        AuditDocument, CertificateBlock, CrossingBlock, EnvironmentBlock,
        OrbitDocument, ParamsBlock, SeriesBlock
    )
    from services.error_analysis import log10_series

logger = logging.getLogger(__name__)

AUDIT_CSV_COLUMNS = [
    "n", "x_G", "x_H", "x_P",
    "delta_alpha", "delta_GP", "delta_HP",
    "log10_delta_alpha", "log10_delta_GP", "log10_delta_HP",
]


def format_binary64(value: float) -> str:
    """17 significant digits: enough to round-trip any binary64."""
    return format(value, ".17g")


def format_reference(value: Decimal, digits: int) -> str:
    """Reference value rounded to `digits` significant digits, fixed-point notation."""
    if value.is_zero():
        return "0"
    rounded = Context(prec=digits, rounding=ROUND_HALF_EVEN).plus(value)
    return format(rounded, "f")


def format_log10(value: float) -> Optional[str]:
    if not math.isfinite(value):
        return None
    return format_binary64(value)


def _write(target: TextIO, write, what: str) -> None:
    try:
        write()
    except OSError as e:
        logger.warning(f"Writing {what} failed; target may hold partial output: {e}")
        raise ExportError(f"failed to write {what}: {e}") from e


def export_csv(report: AuditReport, target: TextIO) -> None:
    """Write the audit report as CSV, one row per iterate."""
    digits = report.environment.export_digits
    logs = [log10_series(s) for s in (report.lower_bound, report.deviation_g, report.deviation_h)]

    def write():
        writer = csv.writer(target, lineterminator="\n")
        writer.writerow(AUDIT_CSV_COLUMNS)
        for n in range(report.params.length):
            writer.writerow([
                n,
                format_binary64(report.orbit_g.values[n]),
                format_binary64(report.orbit_h.values[n]),
                format_reference(report.reference.values[n], digits),
                format_binary64(report.lower_bound.values[n]),
                format_binary64(report.deviation_g.values[n]),
                format_binary64(report.deviation_h.values[n]),
                *[format_log10(series[n]) or "" for series in logs],
            ])

    _write(target, write, "audit CSV")


def _params_block(params) -> ParamsBlock:
    return ParamsBlock(r=params.r, x0=params.x0, iterates=params.iterates)


def build_audit_document(report: AuditReport) -> AuditDocument:
    """Map an AuditReport onto the versioned JSON document."""
    digits = report.environment.export_digits
    env = report.environment

    def as_text(values) -> List[str]:
        return [format_binary64(v) for v in values]

    def as_log_text(series) -> List[Optional[str]]:
        return [format_log10(v) for v in log10_series(series)]

    crossings = {
        key: CrossingBlock(
            threshold=c.threshold,
            iterate=c.iterate,
            delta_at_crossing=None if c.delta_at_crossing is None else format_binary64(c.delta_at_crossing),
        )
        for key, c in report.crossings.items()
    }

    return AuditDocument(
        params=_params_block(report.params),
        environment=EnvironmentBlock(
            tool_version=env.tool_version,
            number_format=env.number_format,
            rounding=env.rounding,
            fused_multiply_add=env.fused_multiply_add,
            reference_backend=env.reference_backend.value,
            reference_digits=env.reference_digits,
            export_digits=env.export_digits,
            threshold=env.threshold,
        ),
        orbits={
            "G": as_text(report.orbit_g.values),
            "H": as_text(report.orbit_h.values),
            "P": [format_reference(v, digits) for v in report.reference.values],
        },
        series=SeriesBlock(
            lower_bound=as_text(report.lower_bound.values),
            deviation_G=as_text(report.deviation_g.values),
            deviation_H=as_text(report.deviation_h.values),
            log10_lower_bound=as_log_text(report.lower_bound),
            log10_deviation_G=as_log_text(report.deviation_g),
            log10_deviation_H=as_log_text(report.deviation_h),
        ),
        crossings=crossings,
        certificate=CertificateBlock(
            holds_everywhere=report.certificate.all_hold,
            violations=list(report.certificate.violations),
        ),
        first_divergence=report.first_divergence,
    )


def export_json(report: AuditReport, target: TextIO) -> None:
    """Write the audit report as a single JSON object."""
    document = build_audit_document(report)
    _write(target, lambda: target.write(document.model_dump_json(indent=2) + "\n"), "audit JSON")


def export_orbits_csv(orbits: Sequence[FixedOrbit], target: TextIO) -> None:
    """Write fixed orbits side by side: n, x_<form>..."""
    if not orbits:
        raise ValueError("no orbits to export")

    def write():
        writer = csv.writer(target, lineterminator="\n")
        writer.writerow(["n"] + [f"x_{o.label}" for o in orbits])
        for n in range(len(orbits[0])):
            writer.writerow([n] + [format_binary64(o.values[n]) for o in orbits])

    _write(target, write, "orbit CSV")


def export_orbits_json(orbits: Sequence[FixedOrbit], target: TextIO) -> None:
    """Write fixed orbits as an OrbitDocument."""
    if not orbits:
        raise ValueError("no orbits to export")
    document = OrbitDocument(
        params=_params_block(orbits[0].params),
        environment=EnvironmentBlock(
            tool_version=__version__,
            number_format="IEEE-754 binary64",
            rounding="round-half-even",
            fused_multiply_add=False,
        ),
        orbits={o.label: [format_binary64(v) for v in o.values] for o in orbits},
    )
    _write(target, lambda: target.write(document.model_dump_json(indent=2) + "\n"), "orbit JSON")


def read_orbit_columns(source: TextIO) -> Dict[str, List[float]]:
    """Parse an exported CSV back into binary64 columns keyed by header (x_* columns only)."""
    reader = csv.DictReader(source)
    columns: Dict[str, List[float]] = {}
    for row in reader:
        for key, text in row.items():
            if key.startswith("x_") and key != "x_P":
                columns.setdefault(key, []).append(float(text))
    return columns


def load_audit_document(source: TextIO) -> AuditDocument:
    """Parse an exported audit JSON file."""
    return AuditDocument.model_validate_json(source.read())
