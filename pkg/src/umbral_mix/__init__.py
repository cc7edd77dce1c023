"""Exact umbral calculus for Barnes' multiple Bernoulli and poly-Bernoulli mixed-type polynomials."""

from .errors import (
    CapExhaustedError,
    DivisionOrderError,
    DomainError,
    InvalidParamsError,
    NotDeltaError,
    UmbralError,
    ZeroDivisorError,
)
from .exact_series import TruncatedSeries, compose, derivative_t, divide, exp_scaled, mul
from .families import (
    BarnesParams,
    MixedFamilyKey,
    barnes_bernoulli_poly,
    bernoulli_numbers,
    falling_factorial,
    frobenius_euler_poly,
    higher_bernoulli_poly,
    mixed_number,
    mixed_poly,
    poly_bernoulli_poly,
    polylog_series,
    rising_factorial,
    stirling2,
)
from .identities import IdentityReport
from .umbral_core import (
    AppellDescriptor,
    Poly,
    ShefferTarget,
    appell_polynomial,
    connection_coefficients,
    functional_apply,
    operator_apply,
    shift,
)

__version__ = "0.1.0"
