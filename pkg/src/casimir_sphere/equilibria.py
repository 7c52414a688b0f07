"""
Equilibrium points of the sphere-mirror force and the levitation analysis.

Stable points are zeros of F(z) where the slope is negative. Their well depth is
the energy needed to climb from the stable point to the neighbouring unstable
point (potential maximum) on the wall side. Levitation compares the envelope of
the oscillating pole force with the weight of the sphere.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .materials import DrudeMaterial, Sphere, resonance
from .mirror_force import pole_envelope, total_force
from .numerics import QuadratureConfig, find_roots_bracketed, integrate_finite
from .units import (
    CONSTANTS,
    PhysicalConstants,
    acceleration_si_to_natural,
    density_gcc_to_natural,
    energy_to_kelvin,
    length_natural_to_um,
    length_um_to_natural,
)

# rounded prefactor and exponent of the closed-form levitation estimate
ROUNDED_COEFFICIENT = 27.0
ROUNDED_EXPONENT = 5.0


class ConfigurationError(ValueError):
    """Inputs that cannot produce a meaningful answer (grid too coarse, missing density)."""


@dataclass(frozen=True)
class EquilibriumPoint:
    z: float  # eV^-1
    stable: bool
    well_depth_to_next: float | None = None  # eV, stable points only
    temperature_equivalent: float | None = None  # K
    barrier_side: str | None = None  # "wall" or "outer"

    @property
    def z_um(self) -> float:
        return length_natural_to_um(self.z)


def _grid_step(s: Sphere) -> float:
    return np.pi / (8 * resonance(s.material).omega)


def suggested_grid_n(s: Sphere, z_lo: float, z_hi: float) -> int:
    """Grid size with spacing pi/(8 Omega): four samples per zero-to-zero interval."""
    return int(math.ceil((z_hi - z_lo) / _grid_step(s))) + 1


_DEPTH_QUAD = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-300)


def _force(s):
    return lambda z: total_force(s, z).total


def well_depth(s: Sphere, z_from: float, z_to: float) -> float:
    """V(z_from) - V(z_to) = int_{z_from}^{z_to} F dz (positive when climbing from z_to up to z_from)."""
    if z_from == z_to:
        return 0.0
    lo, hi = sorted((z_from, z_to))
    val = integrate_finite(_force(s), lo, hi, _DEPTH_QUAD).value
    return val if z_from < z_to else -val


def well_temperature(depth: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Temperature whose k_B T equals ``depth`` (eV)."""
    if depth < 0:
        raise ValueError("well depth must be non-negative")
    return energy_to_kelvin(depth, constants)


def find_equilibria(
    s: Sphere, z_lo: float, z_hi: float, grid_n: int | None = None, *, depths: bool = True
) -> list[EquilibriumPoint]:
    """
    All zeros of the total force on [z_lo, z_hi] (natural units), in increasing z.

    Parameters
    ----------
    grid_n : int, optional
        Scan grid size. Must give spacing <= pi/(4 Omega) so that no pair of zeros
        (spaced ~pi/(2 Omega)) fits inside one grid cell. Defaults to
        :func:`suggested_grid_n`.
    depths : bool
        Attach well depths to stable points. The barrier is taken toward the wall;
        when no unstable point lies on that side within the range (the first well,
        bounded by the repulsive core) the outer barrier is used instead.

    Raises
    ------
    ConfigurationError
        If the grid is too coarse.
    """
    if not 0 < z_lo < z_hi:
        raise ValueError("need 0 < z_lo < z_hi")
    if grid_n is None:
        grid_n = suggested_grid_n(s, z_lo, z_hi)
    limit = np.pi / (4 * resonance(s.material).omega)
    if grid_n < 2 or (z_hi - z_lo) / (grid_n - 1) > limit:
        raise ConfigurationError(
            f"grid too coarse to resolve the force oscillation; use grid_n >= "
            f"{suggested_grid_n(s, z_lo, z_hi)}"
        )
    roots = find_roots_bracketed(_force(s), z_lo, z_hi, grid_n)
    points = []
    for i, r in enumerate(roots):
        stable = r.slope_sign < 0
        if not (stable and depths):
            points.append(EquilibriumPoint(r.x, stable))
            continue
        below = [q for q in roots[:i] if q.slope_sign > 0]
        above = [q for q in roots[i + 1:] if q.slope_sign > 0]
        if below:
            depth, side = well_depth(s, below[-1].x, r.x), "wall"
        elif above:
            depth, side = well_depth(s, above[0].x, r.x), "outer"
        else:
            points.append(EquilibriumPoint(r.x, stable))
            continue
        depth = max(depth, 0.0)
        points.append(EquilibriumPoint(r.x, True, depth, well_temperature(depth), side))
    return points


def stable_spacings(points: list[EquilibriumPoint]) -> np.ndarray:
    zs = np.array([p.z for p in points if p.stable])
    return np.diff(zs)


# ---------------------------------------------------------------- levitation


def _require_density(m: DrudeMaterial) -> float:
    if m.density is None:
        raise ConfigurationError(f"material {m.name or ''} has no density; levitation needs one")
    return m.density


def gravity_force(s: Sphere, constants: PhysicalConstants = CONSTANTS) -> float:
    """Weight (4/3) pi a^3 rho g of the sphere in eV^2."""
    rho = density_gcc_to_natural(_require_density(s.material), constants)
    g = acceleration_si_to_natural(constants.g_accel, constants)
    return 4.0 / 3.0 * np.pi * s.radius**3 * rho * g


def levitation_envelope(s: Sphere, z):
    """Peak value of the oscillating force near z, from the large-z pole amplitude."""
    return pole_envelope(s, z)


def _damping_advisory(m: DrudeMaterial) -> None:
    if m.damping > 0.1 * m.plasma_frequency:
        warnings.warn("gamma > 0.1 omega_p: the weak-damping levitation estimate is unreliable",
                      UserWarning, stacklevel=3)


def levitation_ratio(s: Sphere, z, constants: PhysicalConstants = CONSTANTS):
    """F_max(z) / F_g; the sphere radius cancels."""
    _damping_advisory(s.material)
    return levitation_envelope(s, z) / gravity_force(s, constants)


def ratio_coefficients(constants: PhysicalConstants = CONSTANTS) -> tuple[float, float]:
    """
    (C, k) in ratio ~ C (wp/eV)^4 (um/z) (g cm^-3/rho) exp(-k (gamma/eV)(z/um)).

    For gamma << wp the envelope is wp^4 a^3 e^{-gamma z} / (18 z), so
    C = 1 eV^4 / (24 pi * 1 um * 1 g cm^-3 * g) and k = 1 eV * 1 um.
    """
    um = length_um_to_natural(1.0, constants).value
    rho = density_gcc_to_natural(1.0, constants)
    g = acceleration_si_to_natural(constants.g_accel, constants)
    return 1.0 / (24 * np.pi * um * rho * g), um


def rounded_levitation_ratio(m: DrudeMaterial, z_um, coefficient=ROUNDED_COEFFICIENT,
                             exponent=ROUNDED_EXPONENT):
    """The rounded closed-form estimate, with z in micrometres."""
    rho = _require_density(m)
    z_um = np.asarray(z_um, dtype=float)
    return coefficient * m.plasma_frequency**4 / (z_um * rho) * np.exp(-exponent * m.damping * z_um)


def _solve_unit_ratio(ratio, lo: float) -> float | None:
    if ratio(lo) < 1:
        return None
    hi = 2 * lo
    while ratio(hi) >= 1:
        hi *= 2
        if hi > 1e12:
            raise ConfigurationError("levitation ratio never drops below 1")
    return brentq(lambda z: ratio(z) - 1, lo, hi, xtol=1e-12 * hi, rtol=1e-14)


def max_levitation_height(s: Sphere, constants: PhysicalConstants = CONSTANTS) -> float | None:
    """
    Largest z (um) where the force envelope still matches the weight, or None.

    The envelope is only meaningful in the oscillatory region, so the search starts
    at z = 2/Omega; if the ratio is already below one there, nothing levitates.
    """
    start = 2.0 / resonance(s.material).omega
    z = _solve_unit_ratio(lambda z: float(levitation_ratio(s, z, constants)), start)
    return None if z is None else length_natural_to_um(z, constants)


def rounded_levitation_height(m: DrudeMaterial, coefficient=ROUNDED_COEFFICIENT,
                              exponent=ROUNDED_EXPONENT) -> float | None:
    """z_c (um) from the rounded estimate."""
    start = length_natural_to_um(2.0 / resonance(m).omega)
    return _solve_unit_ratio(
        lambda z: float(rounded_levitation_ratio(m, z, coefficient, exponent)), start
    )


@dataclass(frozen=True)
class LevitationReport:
    sphere: Sphere
    z_c_um: float | None
    spacing_um: float
    coefficient: float
    exponent: float
    z_c_rounded_um: float | None
    equilibrium_ratios: tuple = field(default=())  # (z_um, ratio) at supplied stable points

    @property
    def material(self) -> DrudeMaterial:
        return self.sphere.material

    def envelope(self, z):
        return levitation_envelope(self.sphere, z)

    def ratio(self, z):
        return levitation_ratio(self.sphere, z)


def levitation_report(s: Sphere, points: list[EquilibriumPoint] = (),
                      constants: PhysicalConstants = CONSTANTS) -> LevitationReport:
    coef, expo = ratio_coefficients(constants)
    ratios = tuple(
        (p.z_um, float(levitation_ratio(s, p.z, constants))) for p in points if p.stable
    )
    return LevitationReport(
        sphere=s,
        z_c_um=max_levitation_height(s, constants),
        spacing_um=length_natural_to_um(np.pi / resonance(s.material).omega, constants),
        coefficient=coef,
        exponent=expo,
        z_c_rounded_um=rounded_levitation_height(s.material),
        equilibrium_ratios=ratios,
    )


# ---------------------------------------------------------------- thermal estimates


def thermal_near_levitation_limit(s: Sphere, window: float = 0.8) -> float:
    """
    Median barrier temperature (K) of the stable points with window*z_c <= z <= z_c.

    Right at z_c the wall-side barrier is about F_max/Omega; the median over the
    window reflects the wells a sphere released "near" z_c actually meets.
    """
    zc = max_levitation_height(s)
    if zc is None:
        raise ConfigurationError("sphere does not levitate")
    hi = length_um_to_natural(zc).value
    pts = find_equilibria(s, window * hi, hi)
    temps = [p.temperature_equivalent for p in pts if p.stable and p.temperature_equivalent is not None]
    if not temps:
        raise ConfigurationError("no stable points in the window below z_c")
    return float(np.median(temps))


def thermal_near_wall(s: Sphere, count: int = 3, z_hi_factor: float = 20.0) -> float:
    """Median barrier temperature (K) of the first ``count`` stable points."""
    W = resonance(s.material).omega
    lo = 0.05 / s.material.plasma_frequency
    hi = lo + z_hi_factor / W
    pts = [p for p in find_equilibria(s, lo, hi) if p.stable]
    if len(pts) < count:
        raise ConfigurationError(f"found only {len(pts)} stable points near the wall")
    return float(np.median([p.temperature_equivalent for p in pts[:count]]))
