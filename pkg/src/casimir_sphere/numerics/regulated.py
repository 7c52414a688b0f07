"""
Abel-regulated oscillatory integrals.

For integrands whose amplitude grows with frequency (polynomial times a sinusoid),
the value is defined as

    lim_{beta -> 0+}  int_0^inf g(w) exp(-beta w) dw.

Each regulated integral I(beta) is computed with a composite Gauss-Legendre rule
whose panels follow the oscillation (half a period of sin(2 w z) at most) and are
graded geometrically around any narrow resonance. The beta -> 0 limit is taken by
polynomial (Neville-Richardson) extrapolation over a decreasing beta schedule; this
is sound because I(beta) is analytic in beta with radius of convergence ~ 2z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .quadrature import gauss_legendre_panels


class ExtrapolationError(ArithmeticError):
    """The beta -> 0 extrapolation is diverging; no value is returned."""

    def __init__(self, message: str, table=None):
        super().__init__(message)
        self.table = table


@dataclass(frozen=True)
class RegulatorSchedule:
    betas: tuple[float, ...]

    def __post_init__(self):
        b = np.asarray(self.betas, dtype=float)
        if b.size < 2:
            raise ValueError("need at least two regulator values")
        if np.any(b <= 0) or np.any(np.diff(b) >= 0):
            raise ValueError("regulator values must be positive and strictly decreasing")

    @classmethod
    def geometric(cls, beta0: float, ratio: float = 0.5, terms: int = 8) -> "RegulatorSchedule":
        if not 0 < ratio < 1:
            raise ValueError("ratio must lie in (0, 1)")
        return cls(tuple(float(beta0) * ratio**k for k in range(terms)))

    @property
    def order(self) -> int:
        return len(self.betas) - 1


def default_schedule(z: float, resonance: float | None = None, terms: int = 12) -> RegulatorSchedule:
    """
    beta0 = min(0.5/Omega, z): the pole term carries exp(-beta Omega) and the
    imaginary-axis part has radius 2z in beta, so both must stay well resolved.

    Ratio 0.7 keeps the smallest beta (and so the node count) moderate; with 12
    terms the extrapolation error on w^n sin(2wz), n <= 3, stays below 1e-9.
    """
    beta0 = z if resonance is None else min(0.5 / resonance, z)
    return RegulatorSchedule.geometric(beta0, 0.7, terms)


class RegulatedResult(NamedTuple):
    value: float
    residual: float
    samples: tuple  # I(beta) for each beta in the schedule


# exp(-60) ~ 1e-26: beyond this the regulated tail is invisible in double precision
_TAIL = 60.0


def panel_edges(
    z: float,
    end: float,
    resonances: Sequence[tuple[float, float]] = (),
    cap: float | None = None,
) -> np.ndarray:
    """
    Panel boundaries on ``[0, end]`` for an integrand oscillating like sin(2 w z).

    ``resonances`` are (center, half_width) pairs of complex poles center +/- i*half_width
    close to the real axis; panels shrink geometrically towards each center so that the
    pole always sits at least one panel-width away from any panel it does not bisect.
    """
    hp = np.pi / (2.0 * z)
    if cap is not None:
        hp = min(hp, cap)
    edges = [0.0, end]
    far_start = 0.0
    for center, width in resonances:
        if not 0 < center < end:
            continue
        h = width if width > 0 else 1e-3 * center
        h = min(h, 0.25 * hp, 0.25 * center)
        k = h
        edges += [center - h, center + h]
        while center - 2 * k > 0:
            k *= 2
            edges.append(center - k)
        k = h
        while k < 2 * center:
            k *= 2
            edges.append(center + k)
        far_start = max(far_start, center + k)
    edges = np.unique(np.clip(edges, 0.0, end))
    edges = edges[edges <= min(far_start, end)] if far_start > 0 else np.array([0.0])

    # beyond the graded zone: widths grow with distance, capped at hp
    tail = [edges[-1]]
    centers = [c for c, _ in resonances if 0 < c < end]
    e = edges[-1]
    while e < end:
        dist = min((abs(e - c) for c in centers), default=np.inf)
        step = min(hp, 0.5 * dist) if np.isfinite(dist) else hp
        if step >= hp:
            n = int(np.ceil((end - e) / hp))
            tail.extend(np.linspace(e, end, n + 1)[1:])
            break
        e = min(e + step, end)
        tail.append(e)
    edges = np.unique(np.concatenate([edges, tail]))

    # enforce the cap inside the graded zone as well; split panels into equal parts so
    # a panel centred on a resonance stays centred (odd split count)
    widths = np.diff(edges)
    out = [edges[:1]]
    for lo, w in zip(edges[:-1], widths):
        n = int(np.ceil(w / hp - 1e-12))
        if n > 1:
            if n % 2 == 0:
                n += 1
            out.append(lo + w * np.arange(1, n + 1) / n)
        else:
            out.append(np.array([lo + w]))
    return np.concatenate(out)


def regulated_samples(
    g: Callable[[np.ndarray], np.ndarray],
    z: float,
    betas: Sequence[float],
    resonances: Sequence[tuple[float, float]] = (),
    upper: float | None = None,
    nodes: int = 20,
) -> np.ndarray:
    """I(beta) = int_0^end g(w) exp(-beta w) dw for each beta, sharing one node set."""
    betas = np.asarray(betas, dtype=float)
    end = _TAIL / betas.min()
    if upper is not None:
        end = min(end, float(upper))
    edges = panel_edges(z, end, resonances, cap=2.0 / betas.max())
    # node positions far out on the axis need more than double precision: a rounding
    # of eps*w in w shifts the phase 2wz and the growing amplitude magnifies it
    pts, wts = gauss_legendre_panels(edges, nodes, dtype=np.longdouble)
    gw = (np.asarray(g(pts)) * wts).astype(float)
    # the regulator is smooth, so double precision suffices for it
    x = pts.astype(float)
    return np.array([np.sum(gw * np.exp(-b * x)) for b in betas])


def richardson_to_zero(betas: Sequence[float], samples: Sequence[float]) -> np.ndarray:
    """Neville table for the polynomial through (beta_i, I_i) evaluated at beta = 0."""
    x = np.asarray(betas, dtype=float)
    n = len(x)
    t = np.full((n, n), np.nan)
    t[:, 0] = samples
    for j in range(1, n):
        for i in range(j, n):
            t[i, j] = t[i, j - 1] + (t[i, j - 1] - t[i - 1, j - 1]) * x[i] / (x[i - j] - x[i])
    return t


def regulated_oscillatory_integral(
    g: Callable[[np.ndarray], np.ndarray],
    z: float,
    schedule: RegulatorSchedule | None = None,
    *,
    resonances: Sequence[tuple[float, float]] = (),
    upper: float | None = None,
    nodes: int = 20,
    divergence_tol: float = 1e-6,
) -> RegulatedResult:
    """
    lim_{beta->0} int_0^inf g(w) exp(-beta w) dw for g oscillating like sin(2 w z).

    Parameters
    ----------
    g : callable
        Vectorised integrand of the frequency w.
    z : float
        Sets the oscillation scale: panels are at most half a period of sin(2 w z).
    schedule : RegulatorSchedule, optional
        Decreasing beta values; see :func:`default_schedule`.
    resonances : sequence of (center, half_width)
        Near-real poles of g that need geometric panel grading.
    upper : float, optional
        Finite upper limit (for integrands only known on a bounded range).

    Returns
    -------
    RegulatedResult
        Extrapolated value, |difference of the last two diagonal entries| and the
        raw I(beta) samples.

    Raises
    ------
    ExtrapolationError
        If the diagonal of the Richardson table is still growing and its last step
        exceeds ``divergence_tol`` relative to the sample scale.
    """
    if not z > 0:
        raise ValueError("z must be positive")
    if schedule is None:
        res = min((c for c, _ in resonances), default=None)
        schedule = default_schedule(z, res)
    samples = regulated_samples(g, z, schedule.betas, resonances, upper, nodes)
    if not np.all(np.isfinite(samples)):
        raise ExtrapolationError("regulated samples are not finite", None)
    table = richardson_to_zero(schedule.betas, samples)
    diag = np.diag(table)
    steps = np.abs(np.diff(diag))
    value = float(diag[-1])
    residual = float(steps[-1])
    scale = max(abs(value), float(np.max(np.abs(samples))))
    if len(steps) >= 2 and steps[-1] > steps[-2] and residual > divergence_tol * scale:
        raise ExtrapolationError(
            f"beta -> 0 extrapolation diverging (last step {residual:.3e}, scale {scale:.3e})",
            table,
        )
    return RegulatedResult(value, residual, tuple(float(s) for s in samples))
