"""Exception types shared across the package."""

from __future__ import annotations


class RingHelmholtzError(Exception):
    """Base class for all package errors."""


class DomainError(RingHelmholtzError, ValueError):
    """An argument lies outside the domain of the requested function."""


class OnRingError(DomainError):
    """The field point coincides with (or is numerically on) the source ring."""


class GammaPoleError(RingHelmholtzError, ArithmeticError):
    """Gamma function evaluated at a pole (non-positive integer)."""


class ConvergenceError(RingHelmholtzError, RuntimeError):
    """A series or quadrature failed to reach its tolerance."""
