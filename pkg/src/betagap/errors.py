"""Exception hierarchy shared by all betagap modules."""

from __future__ import annotations

__all__ = [
    "BetagapError",
    "ParameterQuantizationError",
    "LowerParameterPoleError",
    "CancellationError",
    "NonConvergenceError",
    "ResourceLimitError",
    "QuadratureError",
]


class BetagapError(Exception):
    """Base class for all errors raised by this package."""


class ParameterQuantizationError(BetagapError, ValueError):
    """A parameter combination violates an integrality constraint.

    Several evaluation routes only exist when a derived quantity such as
    ``beta * a / 2`` is a nonnegative integer; this error reports which
    quantity failed and what it evaluated to.
    """


class LowerParameterPoleError(BetagapError, ZeroDivisionError):
    """A lower series parameter hits a pole before the series terminates."""


class CancellationError(BetagapError, ArithmeticError):
    """Catastrophic cancellation destroyed the requested accuracy."""


class NonConvergenceError(BetagapError, ArithmeticError):
    """An iterative computation failed to reach its tolerance."""


class ResourceLimitError(BetagapError, RuntimeError):
    """A computation exceeded an explicit size or depth limit."""


class QuadratureError(BetagapError, ArithmeticError):
    """A quadrature rule failed its internal consistency check."""
