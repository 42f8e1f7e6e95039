"""
Test suite for data models and validation.

This module tests the Pydantic models and numeral validation used for map
parameters, orbits, error series and run configuration.
"""

import logging
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

from src.models.errors import NumeralParseError, OrbitEscapeError
from src.models.orbit import (
    EVALUATION_FORMS,
    EvaluationFormId,
    FixedOrbit,
    MapParameters,
    ReferenceOrbit,
    get_form,
    index_for_position,
    orbit_position
)
from src.models.run_config import OutputFormat, RunConfig
from src.models.series import CrossingResult, ErrorSeries, ErrorSeriesKind
from src.models.validation import MapParameterValidator, ValidationResult, parse_exact_rational


class TestMapParameters:
    """Test MapParameters model."""

    def test_valid_parameters(self):
        """Test creating the published parameters."""
        params = MapParameters(r="3.8", x0="0.4", iterates=100)

        assert params.r_exact == Fraction(19, 5)
        assert params.x0_exact == Fraction(2, 5)
        assert params.length == 101

    def test_r_out_of_range(self):
        """Test validation of r range."""
        with pytest.raises(ValidationError, match=r"r out of \[0,4\]"):
            MapParameters(r="4.5", x0="0.4", iterates=10)

    def test_x0_out_of_range(self):
        """Test validation of x0 range."""
        with pytest.raises(ValidationError, match=r"x0 out of \[0,1\]"):
            MapParameters(r="3.8", x0="1.5", iterates=10)

    def test_negative_iterates(self):
        """Test validation of iterate count."""
        with pytest.raises(ValidationError, match="iterates must be >= 0"):
            MapParameters(r="3.8", x0="0.4", iterates=-1)

    def test_malformed_numeral(self):
        """Test rejection of non-decimal numerals."""
        with pytest.raises(ValidationError):
            MapParameters(r="three", x0="0.4", iterates=10)
        with pytest.raises(ValidationError):
            MapParameters(r="3.8", x0="inf", iterates=10)

    def test_boundaries_accepted(self):
        """Test closed ranges: r in [0,4], x0 in [0,1]."""
        MapParameters(r="0", x0="0.0", iterates=0)
        MapParameters(r="4.0", x0="1", iterates=0)

    def test_long_run_warning_is_logged(self, caplog):
        """Test the long-run warning reaches the log."""
        with caplog.at_level(logging.WARNING, logger="src.models.validation"):
            MapParameters(r="3.8", x0="0.4", iterates=200_000)
        assert any(
            record.levelno == logging.WARNING and "Very long runs" in record.getMessage()
            for record in caplog.records
        )

    def test_frozen(self):
        """Test parameters cannot be changed after construction."""
        params = MapParameters(r="3.8", x0="0.4", iterates=1)
        with pytest.raises(ValidationError):
            params.r = "3.9"


class TestNumeralParsing:
    """Test exact rational parsing."""

    @pytest.mark.parametrize("text,expected", [
        ("0.4", Fraction(2, 5)),
        ("3.8", Fraction(19, 5)),
        ("1e-8", Fraction(1, 10 ** 8)),
        (".5", Fraction(1, 2)),
        ("2.", Fraction(2)),
    ])
    def test_exact_values(self, text, expected):
        assert parse_exact_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1/3", "nan", "1e", "0x10", "1,5"])
    def test_malformed(self, text):
        with pytest.raises(NumeralParseError):
            parse_exact_rational(text)

    @pytest.mark.parametrize("text", ["1e-30000000", "1e999999999", "5E-999999999", "1e401"])
    def test_huge_exponent_rejected(self, text):
        with pytest.raises(NumeralParseError, match="exponent out of range"):
            parse_exact_rational(text)

    @pytest.mark.parametrize("text", ["0e999999999", "-0.0e-999999999"])
    def test_zero_with_huge_exponent(self, text):
        assert parse_exact_rational(text) == 0

    def test_exponent_bound_inclusive(self):
        assert parse_exact_rational("1e400") == 10 ** 400
        assert parse_exact_rational("1e-400") == Fraction(1, 10 ** 400)

    def test_parse_error_is_value_error(self):
        """Test that parse errors can be handled as ValueError."""
        with pytest.raises(ValueError):
            parse_exact_rational("x")


class TestValidationResult:
    """Test validation result collection."""

    def test_collects_errors(self):
        result = MapParameterValidator.validate_map_parameters("5", "2", -3)
        assert not result.is_valid
        assert len(result.errors) == 3

    def test_raise_if_invalid(self):
        result = ValidationResult(True)
        result.raise_if_invalid()
        result.add_error("broken")
        with pytest.raises(ValueError, match="broken"):
            result.raise_if_invalid()

    def test_threshold_must_be_positive(self):
        assert MapParameterValidator.validate_threshold("1e-8").is_valid
        assert not MapParameterValidator.validate_threshold("0").is_valid
        assert not MapParameterValidator.validate_threshold("-1e-8").is_valid

    def test_threshold_with_huge_exponent(self):
        result = MapParameterValidator.validate_threshold("1e-30000000")
        assert not result.is_valid
        assert "exponent out of range" in result.errors[0]

    def test_run_config_logs_long_run_warning_once(self, caplog):
        with caplog.at_level(logging.WARNING, logger="src.models.validation"):
            RunConfig(iterates=200_000).to_map_parameters()
        assert sum("Very long runs" in record.getMessage() for record in caplog.records) == 1


class TestEvaluationForms:
    """Test evaluation form registry."""

    def test_both_forms_registered(self):
        assert set(EVALUATION_FORMS) == {EvaluationFormId.G, EvaluationFormId.H}

    def test_schedules(self):
        assert EVALUATION_FORMS[EvaluationFormId.G].schedule[0] == "t1 = fl(r*x)"
        assert EVALUATION_FORMS[EvaluationFormId.H].schedule[-1] == "result = fl(r*t2)"

    def test_get_form_accepts_strings(self):
        assert get_form("H").id == EvaluationFormId.H
        assert get_form(EvaluationFormId.G) is EVALUATION_FORMS[EvaluationFormId.G]


class TestOrbitContainers:
    """Test FixedOrbit and ReferenceOrbit invariants."""

    def test_fixed_orbit_length_checked(self):
        params = MapParameters(r="3.8", x0="0.4", iterates=2)
        with pytest.raises(ValidationError):
            FixedOrbit(values=(0.4, 0.912), form=EvaluationFormId.G, params=params)

    def test_reference_digits_minimum(self):
        params = MapParameters(r="3.8", x0="0.4", iterates=0)
        with pytest.raises(ValidationError):
            ReferenceOrbit(values=(Decimal("0.4"),), digits=20, params=params)

    def test_positions(self):
        assert orbit_position(50) == 51
        assert index_for_position(43) == 42
        with pytest.raises(ValueError):
            index_for_position(0)


class TestErrorSeriesModels:
    """Test ErrorSeries and CrossingResult."""

    def test_negative_values_rejected(self):
        with pytest.raises(ValidationError):
            ErrorSeries(kind=ErrorSeriesKind.DEVIATION, values=(0.0, -1e-9), sources=("G", "P"))

    def test_names(self):
        lower = ErrorSeries(kind=ErrorSeriesKind.LOWER_BOUND, values=(0.0,), sources=("G", "H"))
        dev = ErrorSeries(kind=ErrorSeriesKind.DEVIATION, values=(0.0,), sources=("H", "P"))
        assert lower.name == "lower_bound"
        assert dev.name == "deviation_H"

    def test_crossing_threshold_positive(self):
        with pytest.raises(ValidationError):
            CrossingResult(threshold="0")

    def test_crossing_pairing(self):
        with pytest.raises(ValidationError):
            CrossingResult(threshold="1e-8", iterate=3)
        crossing = CrossingResult(threshold="1e-8", iterate=3, delta_at_crossing=2e-8)
        assert crossing.crossed
        assert crossing.threshold_value == 1e-8


class TestRunConfig:
    """Test RunConfig validation and serialization."""

    def test_defaults_are_the_published_experiment(self):
        config = RunConfig()
        assert (config.r, config.x0, config.iterates) == ("3.8", "0.4", 100)
        assert config.digits == 1000
        assert config.threshold == "1e-8"

    def test_digits_minimum(self):
        with pytest.raises(ValidationError, match="digits must be >= 50"):
            RunConfig(digits=49)

    def test_requires_a_format(self):
        with pytest.raises(ValidationError, match="at least one output format"):
            RunConfig(formats=[])

    def test_rejects_unknown_form(self):
        with pytest.raises(ValidationError):
            RunConfig(forms=["G", "Q"])

    def test_dedupes_forms_and_formats(self):
        config = RunConfig(forms=["H", "G", "H"], formats=["svg", "csv", "svg"])
        assert config.forms == [EvaluationFormId.G, EvaluationFormId.H]
        assert config.formats == [OutputFormat.CSV, OutputFormat.SVG]

    def test_json_round_trip(self):
        config = RunConfig(r="3.9", x0="0.25", iterates=40, formats=["json"], output_dir=Path("out"))
        assert RunConfig.model_validate_json(config.model_dump_json()) == config


class TestErrors:
    """Test error messages."""

    def test_escape_error_kinds(self):
        assert "non-finite" in str(OrbitEscapeError(7, float("nan"), "G"))
        assert "out-of-range" in str(OrbitEscapeError(7, 1.5))
        assert OrbitEscapeError(7, 1.5).iterate == 7
