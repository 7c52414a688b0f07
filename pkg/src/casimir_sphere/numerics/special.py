"""Sine and cosine integrals Si(x), Ci(x), backed by scipy.special.sici."""

from __future__ import annotations

import numpy as np
from scipy import special


def sici(x):
    """(Si(x), Ci(|x|)); Si is odd, Ci is returned for |x| and is -inf at 0."""
    x = np.asarray(x, dtype=float)
    si, ci = special.sici(np.abs(x))
    si = np.sign(x) * si
    if x.ndim == 0:
        return float(si), float(ci)
    return si, ci


def sine_integral(x):
    """Si(x) = int_0^x sin(t)/t dt, odd in x."""
    return sici(x)[0]


def cosine_integral(x):
    """Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt, defined for x > 0."""
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0):
        raise ValueError("Ci(x) requires x > 0")
    return sici(xa)[1]
