"""
High-precision reference orbits.

The reference orbit stands in for the true orbit over a modest number of
iterates. Each multiplication and subtraction is rounded to the working
precision, the way variable-precision arithmetic packages behave; the
inputs enter as exact rationals (r = 38/10, x0 = 4/10) rounded once into
that precision.

Two engines are available: the standard `decimal` module, where terminating
decimals such as 0.912 stay exact, and `mpmath`, a binary multiprecision
engine used as an independent cross-check.
"""

import logging
import math
from decimal import ROUND_HALF_EVEN, Context, Decimal, DivisionByZero, InvalidOperation, Overflow
from fractions import Fraction
from typing import List

import mpmath

try:
    from ..models.errors import OrbitAuditError, PrecisionConfigError
    from ..models.orbit import MIN_REFERENCE_DIGITS, MapParameters, ReferenceBackend, ReferenceOrbit
except ImportError:
    from models.errors import OrbitAuditError, PrecisionConfigError
    from models.orbit import MIN_REFERENCE_DIGITS, MapParameters, ReferenceBackend, ReferenceOrbit

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 1000

# mpmath values are converted to Decimal with a few guard digits
_MPMATH_GUARD_DIGITS = 5


def decimal_context(digits: int) -> Context:
    """Decimal context rounding every operation to `digits` significant digits."""
    return Context(
        prec=digits,
        rounding=ROUND_HALF_EVEN,
        traps=[InvalidOperation, DivisionByZero, Overflow],
    )


def _check_digits(digits: int) -> None:
    if digits < MIN_REFERENCE_DIGITS:
        raise PrecisionConfigError(f"digits must be >= {MIN_REFERENCE_DIGITS}, got {digits}")


def _iterate_decimal(r: Fraction, x0: Fraction, iterates: int, digits: int) -> List[Decimal]:
    ctx = decimal_context(digits)
    one = Decimal(1)
    rd = ctx.divide(Decimal(r.numerator), Decimal(r.denominator))
    z = ctx.divide(Decimal(x0.numerator), Decimal(x0.denominator))
    values = [z]
    for _ in range(iterates):
        z = ctx.multiply(ctx.multiply(rd, z), ctx.subtract(one, z))
        values.append(z)
    return values


def _iterate_mpmath(r: Fraction, x0: Fraction, iterates: int, digits: int) -> List[Decimal]:
    ctx = mpmath.MPContext()
    ctx.dps = digits
    rm = ctx.mpf(r.numerator) / r.denominator
    z = ctx.mpf(x0.numerator) / x0.denominator
    raw = [z]
    for _ in range(iterates):
        z = rm * z * (1 - z)
        raw.append(z)
    return [Decimal(ctx.nstr(v, digits + _MPMATH_GUARD_DIGITS, strip_zeros=False)) for v in raw]


def iterate_reference(
    params: MapParameters,
    digits: int = DEFAULT_DIGITS,
    backend: ReferenceBackend = ReferenceBackend.DECIMAL,
) -> ReferenceOrbit:
    """
    Compute the reference orbit r*z*(1-z) at `digits` decimal digits.

    Raises:
        PrecisionConfigError: digits below the minimum
        OrbitAuditError: the engine produced a non-finite value
    """
    _check_digits(digits)
    backend = ReferenceBackend(backend)
    logger.info(f"Computing {backend.value} reference orbit: {params.iterates} steps at {digits} digits")

    if backend == ReferenceBackend.MPMATH:
        values = _iterate_mpmath(params.r_exact, params.x0_exact, params.iterates, digits)
    else:
        values = _iterate_decimal(params.r_exact, params.x0_exact, params.iterates, digits)

    for n, value in enumerate(values):
        if not value.is_finite():
            raise OrbitAuditError(f"reference orbit became non-finite at iterate {n}")

    return ReferenceOrbit(values=tuple(values), digits=digits, params=params, backend=backend)


def max_abs_difference(a: ReferenceOrbit, b: ReferenceOrbit) -> List[Decimal]:
    """Per-iterate |a - b| evaluated at the larger of the two precisions."""
    ctx = decimal_context(max(a.digits, b.digits))
    return [ctx.abs(ctx.subtract(u, v)) for u, v in zip(a.values, b.values)]


def precision_sufficiency_check(
    params: MapParameters,
    digits: int,
    tolerance,
    backend: ReferenceBackend = ReferenceBackend.DECIMAL,
) -> bool:
    """
    True iff the orbits at `digits` and `2*digits` differ by less than
    `tolerance` at every iterate.
    """
    base = iterate_reference(params, digits, backend)
    doubled = iterate_reference(params, 2 * digits, backend)
    limit = Decimal(str(tolerance)) if not isinstance(tolerance, Decimal) else tolerance

    differences = max_abs_difference(base, doubled)
    worst = max(differences)
    sufficient = all(d < limit for d in differences)

    if sufficient:
        logger.info(f"Reference at {digits} digits is sufficient: max difference {worst:.3e} < {limit}")
    else:
        logger.warning(
            f"Reference at {digits} digits is NOT sufficient: max difference {worst:.3e} >= {limit} "
            f"(expected digit loss ~{digit_loss_bound(params.r_exact, params.iterates)})"
        )
    return sufficient


def digit_loss_bound(r, iterates: int) -> int:
    """
    Upper estimate of decimal digits lost over `iterates` steps: the map's
    derivative r*(1-2x) is bounded by max(r, 1) in absolute value.
    """
    slope = max(float(r), 1.0)
    return math.ceil(iterates * math.log10(slope))


def recommended_digits(params: MapParameters, target_digits: int = 30, margin: int = 10) -> int:
    """Working precision that keeps `target_digits` after the worst-case loss."""
    return max(MIN_REFERENCE_DIGITS, target_digits + digit_loss_bound(params.r_exact, params.iterates) + margin)
