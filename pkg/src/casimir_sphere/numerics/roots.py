"""Grid scan plus Brent refinement for all sign changes of a scalar function."""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np
from scipy.optimize import brentq


class Root(NamedTuple):
    x: float
    slope_sign: int  # -1, 0 or +1


def slope_sign(f: Callable[[float], float], x: float) -> int:
    h = max(1e-6, 1e-6 * abs(x))
    d = f(x + h) - f(x - h)
    return int(np.sign(d))


def find_roots_bracketed(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    grid_n: int,
    *,
    xtol: float = 1e-12,
    values=None,
) -> list[Root]:
    """
    Locate every sign change of ``f`` on a ``grid_n``-point grid over ``[lo, hi]``.

    Each bracket is refined with Brent's method (inverse quadratic interpolation
    safeguarded by bisection), so a root never leaves its bracket. ``values`` may
    supply f on the grid when the caller already has it.
    """
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    if not lo < hi:
        raise ValueError("need lo < hi")
    xs = np.linspace(lo, hi, grid_n)
    fs = np.array([f(x) for x in xs]) if values is None else np.asarray(values, dtype=float)
    roots = []
    for i in range(grid_n - 1):
        a, b, fa, fb = xs[i], xs[i + 1], fs[i], fs[i + 1]
        if fa == 0.0:
            if i == 0 or fs[i - 1] != 0.0:
                roots.append(Root(float(a), slope_sign(f, a)))
            continue
        if fa * fb < 0:
            r = brentq(f, a, b, xtol=xtol * max(1.0, abs(a)), rtol=4 * np.finfo(float).eps)
            roots.append(Root(float(r), slope_sign(f, r)))
    if fs[-1] == 0.0 and fs[-2] != 0.0:
        roots.append(Root(float(xs[-1]), slope_sign(f, xs[-1])))
    return roots
