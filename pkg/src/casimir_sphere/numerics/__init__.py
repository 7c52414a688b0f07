"""Quadrature, regulated oscillatory integrals, Si/Ci and bracketed roots."""

from .quadrature import (
    ConvergenceError,
    DEFAULT_QUADRATURE,
    Estimate,
    QuadratureConfig,
    gauss_legendre_panels,
    integrate_finite,
    integrate_semi_infinite_decay,
)
from .regulated import (
    ExtrapolationError,
    RegulatedResult,
    RegulatorSchedule,
    default_schedule,
    regulated_oscillatory_integral,
    richardson_to_zero,
)
from .roots import Root, find_roots_bracketed, slope_sign
from .special import cosine_integral, sici, sine_integral

__all__ = [
    "ConvergenceError",
    "DEFAULT_QUADRATURE",
    "Estimate",
    "ExtrapolationError",
    "QuadratureConfig",
    "RegulatedResult",
    "RegulatorSchedule",
    "Root",
    "cosine_integral",
    "default_schedule",
    "find_roots_bracketed",
    "gauss_legendre_panels",
    "integrate_finite",
    "integrate_semi_infinite_decay",
    "regulated_oscillatory_integral",
    "richardson_to_zero",
    "sici",
    "sine_integral",
    "slope_sign",
]
