"""
Error analysis over pseudo-orbits and reference orbits.

Given two pseudo-orbits a and b of the same map, half their distance
delta_alpha = |a_n - b_n| / 2 is a lower bound on the true error of at least
one of them: by the triangle inequality |a_n - x_n| + |b_n - x_n| >= |a_n - b_n|,
so max(|a_n - x_n|, |b_n - x_n|) >= delta_alpha for the true orbit x.
"""

import logging
import math
from decimal import Decimal
from typing import List, Optional, Sequence, Union

try:
    from ..models.errors import OrbitMismatchError
    from ..models.orbit import FixedOrbit, ReferenceOrbit
    from ..models.series import CrossingResult, ErrorSeries, ErrorSeriesKind, LowerBoundCertificate
    from .reference_engine import decimal_context
except ImportError:
    from models.errors import OrbitMismatchError
    from models.orbit import FixedOrbit, ReferenceOrbit
    from models.series import CrossingResult, ErrorSeries, ErrorSeriesKind, LowerBoundCertificate
    from services.reference_engine import decimal_context

logger = logging.getLogger(__name__)

LOG10_ZERO = float("-inf")


def _check_comparable(*orbits) -> None:
    first = orbits[0]
    for other in orbits[1:]:
        if len(other) != len(first):
            raise OrbitMismatchError(
                f"orbit {other.label} has {len(other)} values, orbit {first.label} has {len(first)}"
            )
        if other.params != first.params:
            raise OrbitMismatchError(f"orbits {first.label} and {other.label} use different map parameters")


def lower_bound_series(a: FixedOrbit, b: FixedOrbit) -> ErrorSeries:
    """delta_alpha[n] = |a[n] - b[n]| / 2 in binary64."""
    _check_comparable(a, b)
    values = tuple(abs(u - v) / 2.0 for u, v in zip(a.values, b.values))
    return ErrorSeries(kind=ErrorSeriesKind.LOWER_BOUND, values=values, sources=(a.label, b.label))


def deviation_series(orbit: FixedOrbit, reference: ReferenceOrbit) -> ErrorSeries:
    """
    |orbit[n] - reference[n]|, subtracted at the reference precision and
    rounded to binary64 for storage.
    """
    _check_comparable(orbit, reference)
    ctx = decimal_context(reference.digits)
    values = tuple(
        float(ctx.abs(ctx.subtract(Decimal(x), z)))
        for x, z in zip(orbit.values, reference.values)
    )
    return ErrorSeries(kind=ErrorSeriesKind.DEVIATION, values=values, sources=(orbit.label, reference.label))


def first_crossing(series: ErrorSeries, threshold: Union[str, float]) -> CrossingResult:
    """Smallest n with series.values[n] >= threshold, if any."""
    text = threshold if isinstance(threshold, str) else repr(float(threshold))
    result = CrossingResult(threshold=text)
    limit = result.threshold_value

    for n, value in enumerate(series.values):
        if value >= limit:
            logger.info(f"Series {series.name} first reaches {text} at iterate {n} ({value:.6g})")
            return CrossingResult(threshold=text, iterate=n, delta_at_crossing=value)

    logger.info(f"Series {series.name} stays below {text} for all {len(series)} iterates")
    return result


def log10_series(series: Union[ErrorSeries, Sequence[float]]) -> List[float]:
    """Elementwise log10; zeros map to -inf."""
    values = series.values if isinstance(series, ErrorSeries) else series
    return [math.log10(v) if v > 0.0 else LOG10_ZERO for v in values]


def lower_bound_certificate(a: FixedOrbit, b: FixedOrbit, reference: ReferenceOrbit) -> LowerBoundCertificate:
    """
    For each n, whether max(|a_n - ref_n|, |b_n - ref_n|) >= |a_n - b_n| / 2.

    All differences are taken at the reference precision, where binary64
    inputs are exact. A False anywhere indicates an arithmetic defect.
    """
    _check_comparable(a, b, reference)
    ctx = decimal_context(reference.digits)
    two = Decimal(2)
    holds = []
    for x, y, z in zip(a.values, b.values, reference.values):
        dx, dy = Decimal(x), Decimal(y)
        bound = ctx.divide(ctx.abs(ctx.subtract(dx, dy)), two)
        worst = max(ctx.abs(ctx.subtract(dx, z)), ctx.abs(ctx.subtract(dy, z)))
        holds.append(worst >= bound)

    certificate = LowerBoundCertificate(holds=tuple(holds), sources=(a.label, b.label, reference.label))
    if not certificate.all_hold:
        logger.error(f"Lower-bound certificate violated at iterates {certificate.violations}")
    return certificate


def first_divergence(a: FixedOrbit, b: FixedOrbit) -> Optional[int]:
    """First index at which two pseudo-orbits differ bit-wise, or None."""
    _check_comparable(a, b)
    for n, (u, v) in enumerate(zip(a.values, b.values)):
        if u != v:
            return n
    return None
