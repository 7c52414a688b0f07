"""
Force and potential between a Drude sphere and a perfectly reflecting wall.

The production path splits the force as F = J + P: ``J`` is a smooth integral
along the imaginary frequency axis and ``P`` the closed-form residue of the pole
of alpha1 at Omega + i*gamma/2. :func:`total_force_oracle` evaluates the same
force directly on the real frequency axis with an exp(-beta*w) regulator, which
makes the contour rotation itself checkable.

All quantities are in natural units: z in eV^-1, force in eV^2, energy in eV.
Positive force points away from the wall (repulsion).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .materials import OverdampedError, Sphere, alpha1_imaginary_axis, alpha1_real, resonance
from .numerics import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    RegulatedResult,
    RegulatorSchedule,
    gauss_legendre_panels,
    integrate_semi_infinite_decay,
    regulated_oscillatory_integral,
    sici,
)

SQRT3 = np.sqrt(3.0)
# below z*omega_p = 1e-3 J and P cancel to ~1e-6 of their size; use the series instead
SMALL_Z = 1e-3

_J_QUAD = QuadratureConfig(rel_tol=1e-12, abs_tol=1e-300, max_subdivisions=2000)


@dataclass(frozen=True)
class ForceBreakdown:
    z: float
    J: float
    P: float
    total: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", self.J + self.P)


def _check(s: Sphere, z: float) -> None:
    if not z > 0:
        raise ValueError(f"separation must be positive, got {z!r}")
    m = s.material
    if 12 * m.plasma_frequency**2 - 9 * m.damping**2 <= 0:
        raise OverdampedError("overdamped material")


def _j_kernel(s: Sphere, xi):
    # alpha1(i xi) / a^3 / wp^2
    return alpha1_imaginary_axis(s, xi) / (s.radius**3 * s.material.plasma_frequency**2)


def j_integral(s: Sphere, z: float, cfg: QuadratureConfig = _J_QUAD) -> float:
    """Imaginary-frequency contribution J(z) (attractive, J < 0)."""
    _check(s, z)
    wp = s.material.plasma_frequency

    def f(xi):
        zx = z * xi
        return _j_kernel(s, xi) * (((4 * zx + 6) * zx + 6) * zx + 3) * np.exp(-2 * zx)

    est = integrate_semi_infinite_decay(f, 0.5 / z, cfg, points=[wp / SQRT3])
    return -s.radius**3 * wp**2 / (4 * np.pi * z**4) * est.value


def j_integral_sici(s: Sphere, z: float) -> float:
    """J(z) for gamma = 0 in closed form through Si and Ci."""
    _check(s, z)
    if s.material.damping != 0:
        raise ValueError("closed form only holds for gamma = 0")
    wp = s.material.plasma_frequency
    b = wp / SQRT3
    sz = 2 * z
    x = sz * b
    si, ci = sici(x)
    si_shift = si - np.pi / 2
    l0 = (ci * np.sin(x) - si_shift * np.cos(x)) / b  # int e^{-s xi} / (xi^2 + b^2)
    l1 = -ci * np.cos(x) - si_shift * np.sin(x)  # int xi e^{-s xi} / (xi^2 + b^2)
    bracket = (
        4 * z**3 / sz**2
        + 6 * z**2 / sz
        + (6 * z - 4 * z**3 * b * b) * l1
        + (3 - 6 * z**2 * b * b) * l0
    )
    return -s.radius**3 * wp**2 / (12 * np.pi * z**4) * bracket


def pole_term(s: Sphere, z):
    """Residue contribution P(z): oscillates with period pi/Omega, damped by exp(-gamma z)."""
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise ValueError("separation must be positive")
    m = s.material
    W = resonance(m).omega
    g = m.damping
    gz = g * z
    Wz = W * z
    sin_coef = 2 * Wz * (4 * Wz**2 - 3 * gz**2 - 6 * gz - 6)
    cos_coef = 12 * gz * Wz**2 - gz**3 + 12 * Wz**2 - 3 * gz**2 - 6 * gz - 6
    pre = -s.radius**3 * m.plasma_frequency**2 / (48 * W * z**4) * np.exp(-gz)
    return pre * (sin_coef * np.sin(2 * Wz) + cos_coef * np.cos(2 * Wz))


def pole_term_large_z(s: Sphere, z):
    """Leading large-z form of P."""
    z = np.asarray(z, dtype=float)
    m = s.material
    W = resonance(m).omega
    g = m.damping
    pre = -W * m.plasma_frequency**2 * s.radius**3 / (12 * z) * np.exp(-g * z)
    return pre * (2 * W * np.sin(2 * W * z) + 3 * g * np.cos(2 * W * z))


def pole_envelope(s: Sphere, z):
    """Amplitude of :func:`pole_term_large_z`: (Omega wp^2 a^3 / 12 z) sqrt(4 Omega^2 + 9 gamma^2) e^{-gamma z}."""
    z = np.asarray(z, dtype=float)
    m = s.material
    W = resonance(m).omega
    g = m.damping
    return (W * m.plasma_frequency**2 * s.radius**3 / (12 * z)
            * np.hypot(2 * W, 3 * g) * np.exp(-g * z))


def casimir_polder_force(s: Sphere, z):
    """-3 a^3 / (2 pi z^5): the perfectly conducting sphere limit."""
    return -3 * s.radius**3 / (2 * np.pi * np.asarray(z, dtype=float) ** 5)


def casimir_polder_potential(s: Sphere, z):
    return -3 * s.radius**3 / (8 * np.pi * np.asarray(z, dtype=float) ** 4)


def small_z_force(s: Sphere, z: float) -> ForceBreakdown:
    """Leading small-separation terms; the +/- sqrt(3)/(8 z^4) pieces cancel in the sum."""
    a3 = s.radius**3
    wp = s.material.plasma_frequency
    lead = SQRT3 / (8 * z**4)
    return ForceBreakdown(z, a3 * wp * (-lead + wp / (6 * np.pi * z**3)), a3 * wp * lead)


def total_force(s: Sphere, z: float) -> ForceBreakdown:
    _check(s, z)
    if z * s.material.plasma_frequency < SMALL_Z:
        return small_z_force(s, z)
    return ForceBreakdown(z, j_integral(s, z), float(pole_term(s, z)))


def force_bracket(w, z):
    """3 sin 2wz - 6zw cos 2wz - 6z^2w^2 sin 2wz + 4z^3w^3 cos 2wz."""
    x = 2 * w * z
    zw = z * w
    return (3 - 6 * zw * zw) * np.sin(x) + (4 * zw * zw - 6) * zw * np.cos(x)


def total_force_oracle(
    s: Sphere, z: float, schedule: RegulatorSchedule | None = None
) -> RegulatedResult:
    """
    Force from the real-frequency integral

        F = -(1 / 4 pi z^4) lim_{beta->0} int_0^inf alpha1(w) [bracket] e^{-beta w} dw.

    For gamma = 0 the pole sits on the real axis and the integral is taken as a
    principal value (symmetric panels around the pole).
    """
    _check(s, z)
    pole = resonance(s.material)

    def g(w):
        return alpha1_real(s, w) * force_bracket(w, z)

    res = regulated_oscillatory_integral(
        g, z, schedule, resonances=[(pole.omega, pole.half_width)]
    )
    k = -1.0 / (4 * np.pi * z**4)
    return RegulatedResult(k * res.value, abs(k) * res.residual, tuple(k * v for v in res.samples))


def spectrum_sigma(z: float, w):
    """(2 w^2 z^2 - 1) sin 2wz + 2wz cos 2wz; sigma(0) = 0."""
    w = np.asarray(w)
    x = 2 * w * z
    return (2 * (w * z) ** 2 - 1) * np.sin(x) + x * np.cos(x)


def spectrum_integral(z: float, schedule: RegulatorSchedule | None = None) -> RegulatedResult:
    """Regulated integral of sigma over all frequencies; analytically -3/(2z)."""
    if not z > 0:
        raise ValueError("z must be positive")
    return regulated_oscillatory_integral(lambda w: spectrum_sigma(z, w), z, schedule)


def potential_j(s: Sphere, z: float, cfg: QuadratureConfig = _J_QUAD) -> float:
    """
    int_z^inf J(z') dz', done by swapping the order of integration:

        V_J = -(a^3 wp^2 / 4 pi z^3) int K(xi) (2 z^2 xi^2 + 2 z xi + 1) e^{-2 z xi} dxi
    """
    _check(s, z)
    wp = s.material.plasma_frequency

    def f(xi):
        zx = z * xi
        return _j_kernel(s, xi) * ((2 * zx + 2) * zx + 1) * np.exp(-2 * zx)

    est = integrate_semi_infinite_decay(f, 0.5 / z, cfg, points=[wp / SQRT3])
    return -s.radius**3 * wp**2 / (4 * np.pi * z**3) * est.value


def potential_p(s: Sphere, z: float, nodes: int = 16) -> float:
    """int_z^inf P(z') dz' on panels of at most half an oscillation, out to gamma*(z'-z) = 45."""
    _check(s, z)
    g = s.material.damping
    if g <= 0:
        raise ValueError("the pole potential needs gamma > 0 for its tail to converge")
    W = resonance(s.material).omega
    hp = np.pi / (2 * W)
    end = z + 45.0 / g
    # graded from z while z' is comparable to a half-period (P ~ z'^-4 there)
    edges = [z]
    e = z
    while e < end:
        step = min(hp, 0.5 * e)
        if step >= hp:
            n = int(np.ceil((end - e) / hp))
            edges.extend(np.linspace(e, end, n + 1)[1:])
            break
        e += step
        edges.append(e)
    pts, wts = gauss_legendre_panels(np.asarray(edges), nodes)
    return float(np.sum(pole_term(s, pts) * wts))


def potential(s: Sphere, z: float) -> float:
    """V(z) = int_z^inf F dz', so that F = -dV/dz and V(inf) = 0."""
    _check(s, z)
    return potential_j(s, z) + potential_p(s, z)


def force_curve(s: Sphere, zs, threads: int | None = None) -> list[ForceBreakdown]:
    """total_force over a grid, optionally on a thread pool; order is preserved."""
    zs = [float(z) for z in np.atleast_1d(zs)]
    if threads and threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(threads) as ex:
            return list(ex.map(lambda z: total_force(s, z), zs))
    return [total_force(s, z) for z in zs]
