"""
Fixed-precision (binary64) pseudo-orbit generation.

Every step is a chain of single IEEE-754 binary64 operations evaluated in a
fixed order with round-to-nearest-even. CPython performs each float
operation separately and never contracts a*b+c into a fused multiply-add,
so the schedules below are reproduced bit-for-bit on every platform with
SSE2-class doubles.
"""

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

try:
    from ..models.errors import OrbitEscapeError
    from ..models.orbit import EvaluationFormId, FixedOrbit, MapParameters, get_form
    from ..models.validation import parse_exact_rational
except ImportError:
    from models.errors import OrbitEscapeError
    from models.orbit import EvaluationFormId, FixedOrbit, MapParameters, get_form
    from models.validation import parse_exact_rational

logger = logging.getLogger(__name__)


def nearest_binary64(decimal: str) -> float:
    """
    Correctly rounded binary64 value of a decimal numeral (ties-to-even).

    Args:
        decimal: exact decimal numeral, e.g. "0.4"

    Returns:
        The nearest binary64 number to the numeral's rational value, or a
        signed infinity when it rounds past the largest finite binary64

    Raises:
        NumeralParseError: if the numeral is malformed
    """
    # int/int true division is correctly rounded
    exact = parse_exact_rational(decimal)
    try:
        return exact.numerator / exact.denominator
    except OverflowError:
        return math.inf if exact > 0 else -math.inf


def _step_g(x: float, r: float) -> float:
    t1 = r * x
    t2 = 1.0 - x
    return t1 * t2


def _step_h(x: float, r: float) -> float:
    t1 = 1.0 - x
    t2 = x * t1
    return r * t2


_KERNELS = {
    EvaluationFormId.G: _step_g,
    EvaluationFormId.H: _step_h,
}


def step(form, x: float, r: float) -> float:
    """Apply one logistic map step using the form's operation schedule."""
    return _KERNELS[get_form(form).id](x, r)


def iterate_fixed(form, params: MapParameters) -> FixedOrbit:
    """
    Generate a binary64 pseudo-orbit of length params.iterates + 1.

    Raises:
        OrbitEscapeError: when an iterate is non-finite or leaves [0, 1]
    """
    form_id = get_form(form).id
    kernel = _KERNELS[form_id]
    r = nearest_binary64(params.r)
    x = nearest_binary64(params.x0)

    logger.info(f"Iterating form {form_id.value} for {params.iterates} steps (r={params.r}, x0={params.x0})")

    values: List[float] = [x]
    for n in range(1, params.iterates + 1):
        x = kernel(x, r)
        if not 0.0 <= x <= 1.0:
            logger.warning(f"Form {form_id.value} escaped at iterate {n}: {x!r}")
            raise OrbitEscapeError(n, x, form_id.value)
        values.append(x)

    return FixedOrbit(values=tuple(values), form=form_id, params=params)


def _round(value: Fraction) -> float:
    return value.numerator / value.denominator


def exact_step(form, x: float, r: float) -> float:
    """
    Oracle for step(): exact rational arithmetic with one correct rounding
    to binary64 after each operation of the schedule.
    """
    form_id = get_form(form).id
    fx, fr, one = Fraction(x), Fraction(r), Fraction(1)
    if form_id == EvaluationFormId.G:
        t1 = _round(fr * fx)
        t2 = _round(one - fx)
        return _round(Fraction(t1) * Fraction(t2))
    t1 = _round(one - fx)
    t2 = _round(fx * Fraction(t1))
    return _round(fr * Fraction(t2))


@dataclass
class StepAudit:
    """Outcome of comparing the kernel with the rounding oracle."""

    samples: int
    mismatches: List[Tuple[str, float, float, float, float]] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.mismatches


def verify_step_rounding(samples: int = 1000, seed: Optional[int] = 0, r_range: Tuple[float, float] = (0.0, 4.0)) -> StepAudit:
    """
    Check step() against exact_step() on random (x, r) pairs for both forms.

    A mismatch means the interpreter contracts operations or keeps extended
    intermediates, which invalidates golden orbits.
    """
    rng = random.Random(seed)
    audit = StepAudit(samples=samples)
    for _ in range(samples):
        x = rng.random()
        r = rng.uniform(*r_range)
        for form_id in EvaluationFormId:
            got = step(form_id, x, r)
            want = exact_step(form_id, x, r)
            if got != want and not (math.isnan(got) and math.isnan(want)):
                audit.mismatches.append((form_id.value, x, r, got, want))

    if audit.mismatches:
        logger.error(f"Step kernel disagrees with rounding oracle on {len(audit.mismatches)} of {samples} samples")
    else:
        logger.debug(f"Step kernel matched rounding oracle on {samples} samples")
    return audit

