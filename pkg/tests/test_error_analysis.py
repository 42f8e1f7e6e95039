"""
Tests for error series, threshold crossings and the lower-bound certificate.
"""

import math
import random
from fractions import Fraction

import pytest

from src.models.errors import OrbitMismatchError
from src.models.orbit import EvaluationFormId, FixedOrbit, MapParameters
from src.models.series import ErrorSeries, ErrorSeriesKind
from src.services.error_analysis import (
    deviation_series,
    first_crossing,
    first_divergence,
    log10_series,
    lower_bound_certificate,
    lower_bound_series
)
from src.services.fixed_precision import iterate_fixed
from src.services.reference_engine import iterate_reference

G = EvaluationFormId.G
H = EvaluationFormId.H


def _series(values):
    return ErrorSeries(kind=ErrorSeriesKind.LOWER_BOUND, values=tuple(values), sources=("G", "H"))


@pytest.fixture(scope="module")
def published_orbits():
    params = MapParameters(r="3.8", x0="0.4", iterates=100)
    return iterate_fixed(G, params), iterate_fixed(H, params), iterate_reference(params, 1000)


class TestLowerBoundSeries:
    """Test delta_alpha."""

    def test_symmetric(self, published_orbits):
        g, h, _ = published_orbits
        assert lower_bound_series(g, h).values == lower_bound_series(h, g).values

    def test_identical_orbits(self, published_orbits):
        g, _, _ = published_orbits
        assert set(lower_bound_series(g, g).values) == {0.0}

    def test_zero_before_divergence(self, published_orbits):
        g, h, _ = published_orbits
        values = lower_bound_series(g, h).values
        assert values[:4] == (0.0, 0.0, 0.0, 0.0)
        assert values[4] > 0.0

    def test_length_mismatch(self, published_orbits):
        g, _, _ = published_orbits
        short = iterate_fixed(H, MapParameters(r="3.8", x0="0.4", iterates=10))
        with pytest.raises(OrbitMismatchError):
            lower_bound_series(g, short)

    def test_parameter_mismatch(self, published_orbits):
        g, _, _ = published_orbits
        other = iterate_fixed(H, MapParameters(r="3.7", x0="0.4", iterates=100))
        with pytest.raises(OrbitMismatchError):
            lower_bound_series(g, other)

    def test_published_value(self, published_orbits):
        g, h, _ = published_orbits
        logs = log10_series(lower_bound_series(g, h))
        assert logs[50] == pytest.approx(-7.638, abs=1e-3)
        assert logs[49] < -8.0


class TestDeviationSeries:
    """Test delta_GP and delta_HP."""

    def test_initial_deviation_is_representation_error(self, published_orbits):
        g, _, reference = published_orbits
        assert deviation_series(g, reference).values[0] == float(Fraction(1, 5 * 2 ** 53))

    def test_published_values(self, published_orbits):
        g, h, reference = published_orbits
        assert log10_series(deviation_series(g, reference))[42] == pytest.approx(-7.921, abs=1e-3)
        assert log10_series(deviation_series(h, reference))[42] == pytest.approx(-7.954, abs=1e-3)

    def test_names(self, published_orbits):
        g, h, reference = published_orbits
        assert deviation_series(g, reference).name == "deviation_G"
        assert deviation_series(h, reference).name == "deviation_H"

    def test_mismatch(self, published_orbits):
        g, _, _ = published_orbits
        reference = iterate_reference(MapParameters(r="3.8", x0="0.4", iterates=10), 60)
        with pytest.raises(OrbitMismatchError):
            deviation_series(g, reference)


class TestFirstCrossing:
    """Test threshold crossing search."""

    def test_simple(self):
        result = first_crossing(_series([0.0, 1e-9, 1e-7]), "1e-8")
        assert result.iterate == 2
        assert result.delta_at_crossing == 1e-7

    def test_equal_counts_as_crossing(self):
        assert first_crossing(_series([0.0, 1e-8]), "1e-8").iterate == 1

    def test_no_crossing(self):
        result = first_crossing(_series([0.0, 1e-9]), "1e-8")
        assert result.iterate is None
        assert not result.crossed

    def test_float_threshold(self):
        result = first_crossing(_series([0.5]), 0.25)
        assert result.threshold == "0.25"
        assert result.iterate == 0

    def test_published_crossings(self, published_orbits):
        g, h, reference = published_orbits
        assert first_crossing(lower_bound_series(g, h), "1e-8").iterate == 50
        assert first_crossing(deviation_series(g, reference), "1e-8").iterate == 42
        assert first_crossing(deviation_series(h, reference), "1e-8").iterate == 42

    def test_deviation_crosses_no_later_than_bound(self, published_orbits):
        g, h, reference = published_orbits
        bound = first_crossing(lower_bound_series(g, h), "1e-8").iterate
        worst = min(
            first_crossing(deviation_series(g, reference), "1e-8").iterate,
            first_crossing(deviation_series(h, reference), "1e-8").iterate,
        )
        assert worst <= bound


class TestLog10Series:
    """Test log10 conversion."""

    def test_values(self):
        logs = log10_series([1e-8, 0.0, 1.0])
        assert logs[0] == pytest.approx(-8.0)
        assert logs[1] == -math.inf
        assert logs[2] == 0.0


class TestLowerBoundCertificate:
    """Test the certificate max(|a-P|, |b-P|) >= |a-b|/2."""

    def test_published_triple(self, published_orbits):
        certificate = lower_bound_certificate(*published_orbits)
        assert certificate.all_hold
        assert certificate.violations == ()

    @pytest.mark.slow
    def test_random_parameters(self):
        rng = random.Random(2024)
        for _ in range(1000):
            params = MapParameters(
                r=f"{rng.uniform(3.5, 4.0):.9f}", x0=f"{rng.uniform(0.001, 0.999):.9f}", iterates=100
            )
            g = iterate_fixed(G, params)
            h = iterate_fixed(H, params)
            reference = iterate_reference(params, 100)
            assert lower_bound_certificate(g, h, reference).all_hold

    def test_arbitrary_perturbations(self, published_orbits):
        """Holds for any pair of sequences, not only map outputs."""
        g, _, reference = published_orbits
        rng = random.Random(9)
        for _ in range(50):
            a = FixedOrbit(values=tuple(v + rng.uniform(-1e-3, 1e-3) for v in g.values), form=G, params=g.params)
            b = FixedOrbit(values=tuple(v + rng.uniform(-1e-3, 1e-3) for v in g.values), form=H, params=g.params)
            assert lower_bound_certificate(a, b, reference).all_hold


class TestFirstDivergence:
    """Test bit-wise divergence index."""

    def test_identical(self, published_orbits):
        g, _, _ = published_orbits
        assert first_divergence(g, g) is None

    def test_published_orbits(self, published_orbits):
        g, h, _ = published_orbits
        assert first_divergence(g, h) == 4
