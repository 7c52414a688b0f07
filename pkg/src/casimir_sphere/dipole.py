"""
Force on a small polarizable particle treated as a point dipole.

Conventions: ``gradE[i, j]`` is the derivative d_j E^i; fields are in natural
(Gaussian, hbar = c = 1) units so that B and E share units and |k| = omega.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _vec(x, name: str, dtype=float) -> np.ndarray:
    a = np.asarray(x, dtype=dtype)
    if a.shape != (3,):
        raise ValueError(f"{name} must be a 3-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} must be finite")
    return a


@dataclass(frozen=True)
class FieldSample:
    """Field, field gradient and magnetic field at the particle position."""

    E0: np.ndarray
    gradE: np.ndarray
    B0: np.ndarray

    def __post_init__(self):
        dt = complex if any(np.iscomplexobj(x) for x in (self.E0, self.gradE, self.B0)) else float
        object.__setattr__(self, "E0", _vec(self.E0, "E0", dt))
        object.__setattr__(self, "B0", _vec(self.B0, "B0", dt))
        g = np.asarray(self.gradE, dtype=dt)
        if g.shape != (3, 3):
            raise ValueError(f"gradE must be 3x3, got shape {g.shape}")
        if not np.all(np.isfinite(g)):
            raise ValueError("gradE must be finite")
        object.__setattr__(self, "gradE", g)


@dataclass(frozen=True)
class DipoleState:
    p: np.ndarray
    p_dot: np.ndarray

    def __post_init__(self):
        dt = complex if np.iscomplexobj(self.p) or np.iscomplexobj(self.p_dot) else float
        object.__setattr__(self, "p", _vec(self.p, "p", dt))
        object.__setattr__(self, "p_dot", _vec(self.p_dot, "p_dot", dt))


@dataclass(frozen=True)
class PlaneWave:
    """Linearly polarized plane wave A * pol * cos(k.r - omega t + phase)."""

    amplitude: float
    k: np.ndarray
    polarization: np.ndarray
    phase: float = 0.0

    def __post_init__(self):
        k = _vec(self.k, "k")
        e = _vec(self.polarization, "polarization")
        kn = np.linalg.norm(k)
        if not kn > 0:
            raise ValueError("wavevector must be non-zero")
        if abs(np.linalg.norm(e) - 1.0) > 1e-12:
            raise ValueError("polarization must be a unit vector")
        if abs(e @ k) > 1e-12 * kn:
            raise ValueError("polarization must be transverse to k")
        if not np.isfinite(self.amplitude):
            raise ValueError("amplitude must be finite")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "polarization", e)

    @property
    def omega(self) -> float:
        return float(np.linalg.norm(self.k))

    def phasors(self, alpha: complex = 0.0) -> tuple[FieldSample, DipoleState]:
        """Complex amplitudes (time dependence e^{-i omega t}) at the origin, and the induced dipole."""
        c = self.amplitude * np.exp(1j * self.phase)
        E = c * self.polarization.astype(complex)
        gradE = 1j * np.outer(E, self.k)
        B = np.cross(self.k, E) / self.omega
        p = alpha * E
        return FieldSample(E, gradE, B), DipoleState(p, -1j * self.omega * p)


def dipole_force(fs: FieldSample, ds: DipoleState) -> np.ndarray:
    """
    Instantaneous force on a point dipole,

        F^i = (2/3) p^j d_j E^i + (1/3) p_j d^i E^j + (2/3) (p_dot x B)^i.

    For a curl-free field the first two terms combine into (p . grad) E.
    """
    g = fs.gradE
    return (2.0 / 3.0) * (g @ ds.p) + (1.0 / 3.0) * (g.T @ ds.p) + (2.0 / 3.0) * np.cross(ds.p_dot, fs.B0)


def cycle_averaged_force(fs: FieldSample, ds: DipoleState) -> np.ndarray:
    """
    Time average of :func:`dipole_force` for harmonic phasor inputs.

    With X(t) = Re[X e^{-i omega t}], the product of two such quantities averages
    to Re[X conj(Y)] / 2, so the bilinear force formula is applied once.
    """
    g = fs.gradE
    pc = np.conj(ds.p)
    f = (2.0 / 3.0) * (g @ pc) + (1.0 / 3.0) * (g.T @ pc) + (2.0 / 3.0) * np.cross(np.conj(ds.p_dot), fs.B0)
    return 0.5 * np.real(f)


def static_force(E0, gradE, alpha0: float) -> np.ndarray:
    """(alpha0 / 2) grad |E|^2 for a curl-free field: the induced-dipole energy gradient."""
    E0 = np.asarray(E0, dtype=float)
    gradE = np.asarray(gradE, dtype=float)
    # d_i |E|^2 / 2 = E^j d_i E^j
    return alpha0 * (gradE.T @ E0)


def plane_wave_force(w: PlaneWave, alpha: complex) -> np.ndarray:
    """Cycle-averaged radiation force (1/2) k A^2 Im(alpha); zero for a lossless particle."""
    return 0.5 * w.amplitude**2 * np.imag(alpha) * w.k


def absorbed_power(w: PlaneWave, alpha: complex) -> float:
    """Cycle-averaged Joule heating (1/2) omega A^2 Im(alpha)."""
    return 0.5 * w.omega * w.amplitude**2 * float(np.imag(alpha))
