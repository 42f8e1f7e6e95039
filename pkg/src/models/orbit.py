"""
Orbit models for the logistic map audit.

These models define the experiment inputs (exact decimal parameters), the
evaluation forms that generate binary64 pseudo-orbits, and the containers
for fixed-precision and high-precision orbits.
"""

from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .validation import MapParameterValidator, parse_exact_rational

MIN_REFERENCE_DIGITS = 50


class EvaluationFormId(str, Enum):
    """Parenthesizations of r*x*(1-x)."""
    G = "G"
    H = "H"


class ReferenceBackend(str, Enum):
    """Arithmetic engines for the high-precision reference orbit."""
    DECIMAL = "decimal"
    MPMATH = "mpmath"


class MapParameters(BaseModel):
    """Logistic map inputs kept as exact decimal strings."""

    r: str = Field(..., description="Map parameter as an exact decimal string, in [0,4]")
    x0: str = Field(..., description="Initial condition as an exact decimal string, in [0,1]")
    iterates: int = Field(..., description="Number of map applications N")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_domain(self) -> "MapParameters":
        """Reject numerals that do not parse or fall outside the map's domain."""
        MapParameterValidator.validate_map_parameters(self.r, self.x0, self.iterates).raise_if_invalid()
        return self

    @property
    def r_exact(self) -> Fraction:
        return parse_exact_rational(self.r)

    @property
    def x0_exact(self) -> Fraction:
        return parse_exact_rational(self.x0)

    @property
    def length(self) -> int:
        """Orbit length including the initial condition."""
        return self.iterates + 1


class EvaluationForm(BaseModel):
    """One fixed operation schedule for a logistic map step."""

    id: EvaluationFormId
    expression: str = Field(..., description="Algebraic form as written")
    schedule: Tuple[str, ...] = Field(..., description="Binary operations in evaluation order")

    model_config = ConfigDict(frozen=True)


EVALUATION_FORMS: Dict[EvaluationFormId, EvaluationForm] = {
    EvaluationFormId.G: EvaluationForm(
        id=EvaluationFormId.G,
        expression="r*x*(1-x)",
        schedule=("t1 = fl(r*x)", "t2 = fl(1-x)", "result = fl(t1*t2)"),
    ),
    EvaluationFormId.H: EvaluationForm(
        id=EvaluationFormId.H,
        expression="r*(x*(1-x))",
        schedule=("t1 = fl(1-x)", "t2 = fl(x*t1)", "result = fl(r*t2)"),
    ),
}


def get_form(form) -> EvaluationForm:
    """Resolve a form id, its string value, or an EvaluationForm."""
    if isinstance(form, EvaluationForm):
        return form
    return EVALUATION_FORMS[EvaluationFormId(form)]


class FixedOrbit(BaseModel):
    """A binary64 pseudo-orbit generated by one evaluation form."""

    values: Tuple[float, ...] = Field(..., description="Iterates 0..N, index 0 is x0")
    form: EvaluationFormId
    params: MapParameters

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_length(self) -> "FixedOrbit":
        if len(self.values) != self.params.length:
            raise ValueError(f"orbit has {len(self.values)} values, expected {self.params.length}")
        return self

    @property
    def label(self) -> str:
        return self.form.value

    def __len__(self) -> int:
        return len(self.values)


class ReferenceOrbit(BaseModel):
    """High-precision orbit standing in for the true orbit."""

    values: Tuple[Decimal, ...] = Field(..., description="Iterates 0..N at the working precision")
    digits: int = Field(..., ge=MIN_REFERENCE_DIGITS, description="Working precision in decimal digits")
    params: MapParameters
    backend: ReferenceBackend = ReferenceBackend.DECIMAL

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_length(self) -> "ReferenceOrbit":
        if len(self.values) != self.params.length:
            raise ValueError(f"reference has {len(self.values)} values, expected {self.params.length}")
        return self

    @property
    def label(self) -> str:
        return "P"

    def __len__(self) -> int:
        return len(self.values)


def orbit_position(n: int) -> int:
    """1-based position used in published tables and figures for library index n."""
    return n + 1


def index_for_position(position: int) -> int:
    """Library index for a 1-based published position."""
    if position < 1:
        raise ValueError(f"positions start at 1, got {position}")
    return position - 1
