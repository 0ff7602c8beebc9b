"""Azimuthal Fourier coefficients of the free-space Helmholtz Green function.

The coefficient

    G^m(beta, r, R, z - Z) = (1/pi) int_0^pi exp(i beta d) / d cos(m psi) dpsi

is evaluated by closed-form double hypergeometric series, four families of
single-index series and three integral representations, which cross-check
one another.  Ring-source fields are assembled from the coefficients.
"""

from .coeffs import (METHODS, applicable_methods, compute_all, compute_coefficient, max_spread,
                     static_coefficient)
from .errors import ConvergenceError, DomainError, GammaPoleError, OnRingError, RingHelmholtzError
from .hyper2d import DEFAULT_POLICY, MethodReport, SeriesPolicy
from .params import Dimensionless, RingConfig, derive, from_dimensionless
from .ringfield import (FourierSource, analyze_source, greens_closed_form, greens_partial_sum,
                        ring_solution, ring_solution_detailed, synthesize)
from .series import CoeffValue

__all__ = [
    "METHODS", "applicable_methods", "compute_all", "compute_coefficient", "max_spread",
    "static_coefficient", "ConvergenceError", "DomainError", "GammaPoleError", "OnRingError",
    "RingHelmholtzError", "DEFAULT_POLICY", "MethodReport", "SeriesPolicy", "Dimensionless",
    "RingConfig", "derive", "from_dimensionless", "FourierSource", "analyze_source",
    "greens_closed_form", "greens_partial_sum", "ring_solution", "ring_solution_detailed",
    "synthesize", "CoeffValue",
]
__version__ = "0.1.0"
