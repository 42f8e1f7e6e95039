"""
Audit report assembly and the published-experiment preset.

This service runs the G and H pseudo-orbits, the reference orbit, and the
error analysis for one set of map parameters, and bundles the results into
an AuditReport.
"""

import logging
from typing import Dict, List, Optional

try:
    from .. import __version__
    from ..models.orbit import EvaluationFormId, MapParameters, ReferenceBackend, index_for_position
    from ..models.report import AuditReport, EnvironmentRecord, HeadlineComparison
    from .error_analysis import (
        deviation_series, first_crossing, first_divergence, log10_series,
        lower_bound_certificate, lower_bound_series
    )
    from .fixed_precision import iterate_fixed, verify_step_rounding
    from .reference_engine import DEFAULT_DIGITS, iterate_reference
except ImportError:
    from src import __version__
    from models.orbit import EvaluationFormId, MapParameters, ReferenceBackend, index_for_position
    from models.report import AuditReport, EnvironmentRecord, HeadlineComparison
    from services.error_analysis import (
        deviation_series, first_crossing, first_divergence, log10_series,
        lower_bound_certificate, lower_bound_series
    )
    from services.fixed_precision import iterate_fixed, verify_step_rounding
    from services.reference_engine import DEFAULT_DIGITS, iterate_reference

logger = logging.getLogger(__name__)

PUBLISHED_PARAMETERS = {"r": "3.8", "x0": "0.4", "iterates": 100}
PUBLISHED_THRESHOLD = "1e-8"

# Published values use 1-based positions (x(1) is the initial condition).
PUBLISHED_HEADLINES: Dict[str, Dict[str, float]] = {
    "lower_bound": {"position": 51, "log10": -7.638},
    "deviation_G": {"position": 43, "log10": -7.921},
    "deviation_H": {"position": 43, "log10": -7.954},
}


class AuditReportBuilder:
    """Builds audit reports for one reference configuration."""

    def __init__(
        self,
        digits: int = DEFAULT_DIGITS,
        threshold: str = PUBLISHED_THRESHOLD,
        backend: ReferenceBackend = ReferenceBackend.DECIMAL,
        export_digits: int = 30,
    ):
        """Initialize builder with reference and crossing settings."""
        self.digits = digits
        self.threshold = threshold
        self.backend = ReferenceBackend(backend)
        self.export_digits = export_digits

    def environment(self) -> EnvironmentRecord:
        """Record of every setting that determines the report."""
        return EnvironmentRecord(
            tool_version=__version__,
            reference_backend=self.backend,
            reference_digits=self.digits,
            export_digits=self.export_digits,
            threshold=self.threshold,
        )

    def build(self, params: MapParameters) -> AuditReport:
        """
        Run both evaluation forms, the reference orbit and all series.

        Args:
            params: map parameters shared by every orbit

        Returns:
            AuditReport with series, crossings and certificate
        """
        logger.info(f"Building audit report for r={params.r}, x0={params.x0}, N={params.iterates}")

        orbit_g = iterate_fixed(EvaluationFormId.G, params)
        orbit_h = iterate_fixed(EvaluationFormId.H, params)
        reference = iterate_reference(params, self.digits, self.backend)

        lower = lower_bound_series(orbit_g, orbit_h)
        dev_g = deviation_series(orbit_g, reference)
        dev_h = deviation_series(orbit_h, reference)

        crossings = {
            "lower_bound": first_crossing(lower, self.threshold),
            "deviation_G": first_crossing(dev_g, self.threshold),
            "deviation_H": first_crossing(dev_h, self.threshold),
        }

        report = AuditReport(
            params=params,
            orbit_g=orbit_g,
            orbit_h=orbit_h,
            reference=reference,
            lower_bound=lower,
            deviation_g=dev_g,
            deviation_h=dev_h,
            crossings=crossings,
            certificate=lower_bound_certificate(orbit_g, orbit_h, reference),
            first_divergence=first_divergence(orbit_g, orbit_h),
            environment=self.environment(),
        )

        logger.info(
            f"Audit complete: G/H diverge at {report.first_divergence}, "
            f"lower bound crosses {self.threshold} at {crossings['lower_bound'].iterate}"
        )
        return report


def reproduce_paper(backend: ReferenceBackend = ReferenceBackend.DECIMAL, export_digits: int = 30) -> AuditReport:
    """Run the published experiment: r=3.8, x0=0.4, N=100, 1000 digits, 1e-8."""
    audit = verify_step_rounding(samples=200)
    if not audit.clean:
        logger.error("Fixed-precision kernel is contaminated (fused or extended-precision operations); "
                     "published values will not be reproduced")

    builder = AuditReportBuilder(
        digits=DEFAULT_DIGITS,
        threshold=PUBLISHED_THRESHOLD,
        backend=backend,
        export_digits=export_digits,
    )
    return builder.build(MapParameters(**PUBLISHED_PARAMETERS))


def compare_headlines(report: AuditReport) -> List[HeadlineComparison]:
    """Measured log10 errors at the published positions next to the published values."""
    comparisons = []
    for name, published in PUBLISHED_HEADLINES.items():
        position = int(published["position"])
        n = index_for_position(position)
        series = report.series[name]
        if n >= len(series):
            continue
        comparisons.append(HeadlineComparison(
            name=name,
            iterate=n,
            position=position,
            measured_log10=log10_series([series.values[n]])[0],
            published_log10=published["log10"],
        ))
    return comparisons


def headline_lines(comparisons: List[HeadlineComparison]) -> List[str]:
    """Human-readable lines for the CLI."""
    lines = []
    for c in comparisons:
        status = "ok" if c.within_tolerance else "MISMATCH"
        lines.append(
            f"log10 {c.name} at position {c.position} (n={c.iterate}): "
            f"{c.measured_log10:.3f}  published {c.published_log10:.3f}  [{status}]"
        )
    return lines


def summarize_crossing(report: AuditReport, key: str = "lower_bound") -> Optional[str]:
    crossing = report.crossings[key]
    if not crossing.crossed:
        return None
    return f"{key} first reaches {crossing.threshold} at iterate {crossing.iterate} (delta={crossing.delta_at_crossing:.6g})"
