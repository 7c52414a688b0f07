"""
Force and potential on a sphere in front of a wall described by Fresnel coefficients.

Each propagating mode (frequency w, direction cosine c to the wall normal) reaches
the sphere together with its reflection, whose complex amplitude is R e^{i delta}.
The interference of the two produces a z-force on the induced dipole; summing over
modes gives

    F(z) = (1/pi) int dw w^4 alpha1(w) int_0^1 dc c [-R_S sin(2wzc + d_S) + R_P (1 - 2c^2) sin(2wzc + d_P)]
    V(z) = (1/2pi) int dw w^3 alpha1(w) int_0^1 dc [-R_S cos(2wzc + d_S) + R_P (1 - 2c^2) cos(2wzc + d_P)]

The mode normalization A^2 = 4 pi w / (2 pi)^3 is folded into the prefactors.
Evanescent modes are not part of the sum.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from .materials import Sphere, alpha1_real, resonance
from .numerics import RegulatorSchedule, regulated_oscillatory_integral


class FresnelRangeError(ValueError):
    """Frequency or angle outside the range a tabulated model covers."""


class FresnelModel:
    """
    Base class: ``model(omega, c)`` returns ``(R_S, delta_S, R_P, delta_P)``.

    ``omega`` may be an array; ``c`` is the cosine of the angle to the normal.
    Beyond ``omega_max`` the force integrals hold the coefficients at their
    ``omega_max`` values. ``absorptive`` marks walls for which T^2 + R^2 = 1 fails;
    they are accepted but lie outside the validated model.
    """

    omega_max: float = np.inf
    absorptive: bool = False

    def __call__(self, omega, c):
        raise NotImplementedError

    def transmission(self, omega, c):
        """(T_S, T_P) of a lossless interface, T = sqrt(1 - R^2)."""
        rs, _, rp, _ = self(omega, c)
        return np.sqrt(1 - np.square(rs)), np.sqrt(1 - np.square(rp))


class PerfectMirror(FresnelModel):
    """Perfect conductor: R = 1 and delta = pi for both polarizations."""

    def __call__(self, omega, c):
        one = np.ones(np.shape(omega))
        return one, np.pi * one, one, np.pi * one

    def __repr__(self):
        return "PerfectMirror()"


class CallableFresnel(FresnelModel):
    """Wraps a user function ``f(omega, c) -> (R_S, delta_S, R_P, delta_P)``."""

    def __init__(self, func: Callable, omega_max: float = np.inf, absorptive: bool = False):
        self.func = func
        self.omega_max = float(omega_max)
        self.absorptive = absorptive

    def __call__(self, omega, c):
        shape = np.shape(omega)
        rs, ds, rp, dp = (np.broadcast_to(np.asarray(v, dtype=float), shape)
                          for v in self.func(omega, c))
        for r in (rs, rp):
            if np.any((r < 0) | (r > 1)):
                raise ValueError("reflection magnitudes must lie in [0, 1]")
        return rs, ds, rp, dp


FRESNEL_COLUMNS = ("omega_eV", "cos_theta", "R_S", "delta_S", "R_P", "delta_P")


class TabulatedFresnel(FresnelModel):
    """
    Coefficients on a rectangular (omega, cos_theta) grid with bilinear interpolation.

    Phases are interpolated as given, so tables must be unwrapped along both axes.
    """

    def __init__(self, omega, cos_theta, R_S, delta_S, R_P, delta_P, absorptive: bool = False):
        self.omega = np.asarray(omega, dtype=float)
        self.cos_theta = np.asarray(cos_theta, dtype=float)
        shape = (self.omega.size, self.cos_theta.size)
        if self.omega.size < 2 or self.cos_theta.size < 2:
            raise ValueError("need at least two grid points per axis")
        tables = [np.asarray(t, dtype=float).reshape(shape) for t in (R_S, delta_S, R_P, delta_P)]
        for t in (tables[0], tables[2]):
            if np.any((t < 0) | (t > 1)):
                raise ValueError("reflection magnitudes must lie in [0, 1]")
        self._interp = [
            RegularGridInterpolator((self.omega, self.cos_theta), t, method="linear")
            for t in tables
        ]
        self.omega_max = float(self.omega[-1])
        self.absorptive = absorptive

    @classmethod
    def from_csv(cls, path, absorptive: bool = False) -> "TabulatedFresnel":
        """Load rows of omega_eV, cos_theta, R_S, delta_S, R_P, delta_P (header required)."""
        with open(Path(path), newline="") as fh:
            reader = csv.DictReader(fh)
            missing = set(FRESNEL_COLUMNS) - set(reader.fieldnames or ())
            if missing:
                raise ValueError(f"missing columns: {', '.join(sorted(missing))}")
            rows = [[float(r[k]) for k in FRESNEL_COLUMNS] for r in reader]
        data = np.array(rows)
        w = np.unique(data[:, 0])
        c = np.unique(data[:, 1])
        if len(data) != w.size * c.size:
            raise ValueError("table is not a full rectangular (omega, cos_theta) grid")
        order = np.lexsort((data[:, 1], data[:, 0]))
        data = data[order]
        return cls(w, c, *(data[:, k] for k in range(2, 6)), absorptive=absorptive)

    def __call__(self, omega, c):
        w = np.atleast_1d(np.asarray(omega, dtype=float))
        lo, hi = self.omega[0], self.omega[-1]
        if np.any((w < lo) | (w > hi)):
            raise FresnelRangeError(f"omega outside table range [{lo}, {hi}] eV")
        if not self.cos_theta[0] <= c <= self.cos_theta[-1]:
            raise FresnelRangeError(
                f"cos_theta={c} outside table range [{self.cos_theta[0]}, {self.cos_theta[-1]}]"
            )
        pts = np.column_stack([w, np.full_like(w, c)])
        out = tuple(f(pts).reshape(np.shape(omega)) for f in self._interp)
        return out


@dataclass(frozen=True)
class ModeGeometry:
    """A propagating mode at distance z: frequency, direction cosine and reflection phase."""

    omega: float
    c: float
    z: float
    delta: float = 0.0

    def __post_init__(self):
        if not 0 < self.c <= 1:
            raise ValueError("direction cosine must lie in (0, 1]")
        if self.omega < 0:
            raise ValueError("frequency must be non-negative")

    @property
    def phase(self) -> float:
        return 2 * self.omega * self.z * self.c + self.delta


def mode_force_s(A2, R_S, alpha1, c, delta, *, omega=1.0):
    """
    z-force from one S-polarized mode and its reflection, -w A^2 R_S alpha1 c sin(Delta).

    The factor ``omega`` comes from the field time derivative in the magnetic term;
    with the default 1 the expression is the force per unit frequency.
    """
    return -omega * A2 * R_S * alpha1 * c * np.sin(delta)


def mode_force_p(A2, R_P, alpha1, c, delta, *, omega=1.0):
    """z-force from one P-polarized mode, w A^2 R_P alpha1 c (1 - 2c^2) sin(Delta)."""
    return omega * A2 * R_P * alpha1 * c * (1 - 2 * c * c) * np.sin(delta)


def _coefficients(mirror: FresnelModel, omega, c, cutoff: float):
    w = np.asarray(omega)
    return mirror(np.minimum(w.astype(float), cutoff), c)


def _bracket_phasor(mirror: FresnelModel, w, c: float, cutoff):
    """
    (r_P - r_S) - 2c^2 r_P with r = R e^{i delta}.

    Same as -r_S + (1 - 2c^2) r_P, but equal S and P coefficients cancel exactly,
    so the small-c value 2c^2 keeps full relative precision. The phase shift is
    applied as a complex factor rather than added to 2wzc, which would round.
    """
    rs, ds, rp, dp = _coefficients(mirror, w, c, cutoff)
    r_s = rs * np.exp(1j * np.asarray(ds))
    r_p = rp * np.exp(1j * np.asarray(dp))
    return (r_p - r_s) - 2 * c * c * r_p


def force_integrand(s: Sphere, mirror: FresnelModel, z: float, omega, c: float, cutoff=np.inf):
    """(1/pi) w^4 alpha1 c [-R_S sin(2wzc + d_S) + R_P (1 - 2c^2) sin(2wzc + d_P)]."""
    w = np.asarray(omega)
    bracket = np.imag(_bracket_phasor(mirror, w, c, cutoff) * np.exp(2j * w * z * c))
    return w**4 * alpha1_real(s, w) * c * bracket / np.pi


def perfect_mirror_integrand(s: Sphere, z: float, omega, c: float):
    """The perfect-mirror case of :func:`force_integrand`: (1/pi) w^4 alpha1 2c^3 sin(2wzc)."""
    w = np.asarray(omega)
    return w**4 * alpha1_real(s, w) * 2 * c**3 * np.sin(2 * w * z * c) / np.pi


def potential_integrand(s: Sphere, mirror: FresnelModel, z: float, omega, c: float, cutoff=np.inf):
    """(1/2pi) w^3 alpha1 [-R_S cos(2wzc + d_S) + R_P (1 - 2c^2) cos(2wzc + d_P)]."""
    w = np.asarray(omega)
    bracket = np.real(_bracket_phasor(mirror, w, c, cutoff) * np.exp(2j * w * z * c))
    return w**3 * alpha1_real(s, w) * bracket / (2 * np.pi)


@dataclass(frozen=True)
class InterfaceConfig:
    """
    Numerical settings for the mode sums.

    c_nodes: Gauss-Legendre nodes for the angular integral.
    nodes: Gauss-Legendre nodes per frequency panel.
    terms: length of the regulator schedule.
    """

    c_nodes: int = 32
    nodes: int = 20
    terms: int = 12

    def __post_init__(self):
        if self.c_nodes < 4 or self.nodes < 4 or self.terms < 2:
            raise ValueError("node and term counts too small")


DEFAULT_INTERFACE = InterfaceConfig()


def default_cutoff(s: Sphere, z: float) -> float:
    """40 max(omega_p, 1/z): where alpha1 has settled onto its w^-2 tail."""
    return 40.0 * max(s.material.plasma_frequency, 1.0 / z)


def _mode_sum(s, mirror, z, omega_max, cfg, integrand) -> float:
    if not z > 0:
        raise ValueError(f"separation must be positive, got {z!r}")
    if mirror.absorptive:
        warnings.warn("absorptive wall: the mode sum is not validated in this regime",
                      UserWarning, stacklevel=3)
    cfg = cfg or DEFAULT_INTERFACE
    cutoff = default_cutoff(s, z) if omega_max is None else float(omega_max)
    cutoff = min(cutoff, mirror.omega_max)
    pole = resonance(s.material)
    hint = [(pole.omega, pole.half_width)]
    # the angular integral is outermost: at fixed c the frequency integral oscillates
    # like sin(2 w z c), which the regulated rule handles for any w range
    x, wc = np.polynomial.legendre.leggauss(cfg.c_nodes)
    cs, wc = 0.5 * (x + 1), 0.5 * wc
    total = 0.0
    for c, weight in zip(cs, wc):
        zc = z * c
        beta0 = min(0.5 / pole.omega, zc)
        sched = RegulatorSchedule.geometric(beta0, 0.7, cfg.terms)
        res = regulated_oscillatory_integral(
            lambda w: integrand(s, mirror, z, w, c, cutoff), zc, sched,
            resonances=hint, nodes=cfg.nodes,
        )
        total += weight * res.value
    return float(total)


def interface_force(s: Sphere, mirror: FresnelModel, z: float, omega_max: float | None = None,
                    cfg: InterfaceConfig | None = None) -> float:
    """
    Mode-summed force on the sphere (eV^2, positive away from the wall).

    Parameters
    ----------
    s : Sphere
    mirror : FresnelModel
    z : float
        Sphere-wall distance in eV^-1.
    omega_max : float, optional
        Frequency beyond which the reflection coefficients are frozen at their
        value there; defaults to :func:`default_cutoff`. The frequency integral
        itself always runs to infinity under the exp(-beta w) regulator.
    cfg : InterfaceConfig, optional
    """
    return _mode_sum(s, mirror, z, omega_max, cfg, force_integrand)


def interface_potential(s: Sphere, mirror: FresnelModel, z: float, omega_max: float | None = None,
                        cfg: InterfaceConfig | None = None) -> float:
    """Mode-summed interaction energy (eV); same conventions as :func:`interface_force`."""
    return _mode_sum(s, mirror, z, omega_max, cfg, potential_integrand)
