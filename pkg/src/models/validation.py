"""
Validation utilities for decimal numerals and map parameter ranges.

Map inputs are carried as exact decimal strings. This module checks their
syntax, converts them to exact rationals and checks the domain of the
logistic map parameters.
"""

import logging
import re
from decimal import Decimal
from fractions import Fraction
from typing import List, Optional

from .errors import NumeralParseError

DECIMAL_NUMERAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")

# Largest accepted |adjusted exponent|; binary64 spans about 1e-324 to 1e308
MAX_DECIMAL_EXPONENT = 400

R_RANGE = (Fraction(0), Fraction(4))
X0_RANGE = (Fraction(0), Fraction(1))

logger = logging.getLogger(__name__)


class ValidationResult:
    """Result of a validation operation."""

    def __init__(self, is_valid: bool, errors: Optional[List[str]] = None, warnings: Optional[List[str]] = None):
        self.is_valid = is_valid
        self.errors = errors or []
        self.warnings = warnings or []

    def add_error(self, error: str):
        """Add an error to the validation result."""
        self.errors.append(error)
        self.is_valid = False

    def add_warning(self, warning: str):
        """Add a warning to the validation result."""
        self.warnings.append(warning)

    def merge(self, other: "ValidationResult") -> None:
        """Fold another result into this one."""
        for error in other.errors:
            self.add_error(error)
        self.warnings.extend(other.warnings)

    def raise_if_invalid(self) -> None:
        """Log collected warnings, then raise ValueError carrying all collected errors."""
        for warning in self.warnings:
            logger.warning(warning)
        if not self.is_valid:
            raise ValueError("; ".join(self.errors))


def parse_exact_rational(text: str) -> Fraction:
    """
    Parse a decimal numeral into its exact rational value.

    Args:
        text: numeral such as "3.8", "0.4" or "1e-8"

    Returns:
        Fraction equal to the numeral's value

    Raises:
        NumeralParseError: if the text is not a finite decimal numeral or its
            exponent exceeds MAX_DECIMAL_EXPONENT
    """
    if not isinstance(text, str):
        raise NumeralParseError(repr(text), "expected a string")
    candidate = text.strip()
    if not DECIMAL_NUMERAL.match(candidate):
        raise NumeralParseError(text)
    value = Decimal(candidate)
    if value.is_zero():
        return Fraction(0)
    if abs(value.adjusted()) > MAX_DECIMAL_EXPONENT:
        raise NumeralParseError(text, "exponent out of range")
    return Fraction(value)


class MapParameterValidator:
    """Validator for logistic map parameter strings."""

    @staticmethod
    def validate_numeral(name: str, text: str, bounds: Optional[tuple] = None) -> ValidationResult:
        """
        Validate one numeral and, optionally, its closed range.

        Args:
            name: field name used in messages
            text: the decimal string
            bounds: (low, high) Fractions, inclusive

        Returns:
            ValidationResult with validation status and any errors
        """
        result = ValidationResult(True)

        try:
            value = parse_exact_rational(text)
        except NumeralParseError as e:
            result.add_error(f"{name} {e.reason}: {text!r}")
            return result

        if bounds is not None:
            low, high = bounds
            if not low <= value <= high:
                result.add_error(f"{name} out of [{low},{high}]")

        return result

    @staticmethod
    def validate_map_parameters(r: str, x0: str, iterates: int) -> ValidationResult:
        """Validate r, x0 and the iterate count together."""
        result = ValidationResult(True)
        result.merge(MapParameterValidator.validate_numeral("r", r, R_RANGE))
        result.merge(MapParameterValidator.validate_numeral("x0", x0, X0_RANGE))

        if iterates < 0:
            result.add_error(f"iterates must be >= 0, got {iterates}")
        elif iterates > 100_000:
            result.add_warning("Very long runs lose all significant digits against the reference")

        return result

    @staticmethod
    def validate_threshold(text: str) -> ValidationResult:
        """Validate a shadowing distance: a positive decimal numeral."""
        result = MapParameterValidator.validate_numeral("threshold", text)
        if result.is_valid and parse_exact_rational(text) <= 0:
            result.add_error("threshold must be > 0")
        return result
