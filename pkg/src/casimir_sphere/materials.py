"""Drude dielectric model, small-sphere polarizability and the material catalog."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .units import length_nm_to_natural


class OverdampedError(ValueError):
    """Raised for gamma >= 2 omega_p / sqrt(3): the resonance pole becomes real."""


@dataclass(frozen=True)
class DrudeMaterial:
    plasma_frequency: float  # eV
    damping: float = 0.0  # eV
    density: float | None = None  # g/cm^3
    name: str | None = None

    def __post_init__(self):
        if not self.plasma_frequency > 0:
            raise ValueError("plasma frequency must be positive")
        if not self.damping >= 0:
            raise ValueError("damping must be non-negative")
        if self.density is not None and self.density < 0:
            raise ValueError("density must be non-negative")
        if 12 * self.plasma_frequency**2 - 9 * self.damping**2 <= 0:
            raise OverdampedError(
                f"overdamped material: gamma={self.damping} >= 2*omega_p/sqrt(3)"
            )

    @property
    def omega_p(self) -> float:
        return self.plasma_frequency

    @property
    def gamma(self) -> float:
        return self.damping

    def with_damping_ratio(self, ratio: float) -> "DrudeMaterial":
        return DrudeMaterial(self.plasma_frequency, ratio * self.plasma_frequency,
                             self.density, self.name)


@dataclass(frozen=True)
class Sphere:
    """Sphere of radius ``radius`` (eV^-1) made of ``material``."""

    radius: float
    material: DrudeMaterial

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("sphere radius must be positive")

    @classmethod
    def from_nm(cls, radius_nm: float, material: DrudeMaterial) -> "Sphere":
        return cls(length_nm_to_natural(radius_nm), material)

    @property
    def static_polarizability(self) -> float:
        return self.radius**3

    @property
    def dipole_advisory(self) -> bool:
        """True when a*omega_p >= 1, i.e. the dipole approximation is doubtful."""
        return self.radius * self.material.plasma_frequency >= 1.0


@dataclass(frozen=True)
class ResonancePole:
    omega: float
    half_width: float


def epsilon(m: DrudeMaterial, omega):
    """Drude dielectric function 1 - wp^2 / (w (w + i gamma))."""
    w = np.asarray(omega, dtype=float)
    if np.any(w <= 0):
        raise ValueError("epsilon is singular at omega <= 0")
    return 1.0 - m.plasma_frequency**2 / (w * (w + 1j * m.damping))


def polarizability(s: Sphere, omega):
    """Complex polarizability a^3 (eps - 1) / (eps + 2)."""
    eps = epsilon(s.material, omega)
    if np.any(eps == -2):
        raise ZeroDivisionError("eps = -2: polarizability pole on the real axis")
    return s.radius**3 * (eps - 1.0) / (eps + 2.0)


def alpha1_real(s: Sphere, omega):
    """Real part of the polarizability, continuous at omega = 0 (value a^3)."""
    w = np.asarray(omega, dtype=float)
    wp2 = s.material.plasma_frequency**2
    g = s.material.damping
    w2 = w * w
    return s.radius**3 * wp2 * (wp2 - 3 * w2) / ((3 * w2 - wp2) ** 2 + 9 * w2 * g * g)


def alpha1_imaginary_axis(s: Sphere, xi):
    """alpha1 continued to omega = i*xi (real for real xi)."""
    x = np.asarray(xi, dtype=float)
    wp2 = s.material.plasma_frequency**2
    g = s.material.damping
    u = 3 * x * x + wp2
    return s.radius**3 * wp2 * u / (u * u - 9 * x * x * g * g)


def resonance(m: DrudeMaterial) -> ResonancePole:
    """Pole of alpha1 at Omega + i gamma/2 with Omega = sqrt(12 wp^2 - 9 gamma^2)/6."""
    disc = 12 * m.plasma_frequency**2 - 9 * m.damping**2
    if disc <= 0:
        raise OverdampedError("overdamped material has no complex pole pair")
    return ResonancePole(np.sqrt(disc) / 6.0, m.damping / 2.0)


def equilibrium_spacing(m: DrudeMaterial) -> float:
    """pi / Omega in eV^-1."""
    return np.pi / resonance(m).omega


@lru_cache(maxsize=1)
def _catalog() -> dict:
    text = resources.files(__package__).joinpath("data/materials.json").read_text()
    data = json.loads(text)
    return {rec["name"]: rec for rec in data["materials"]}


def catalog() -> list[dict]:
    """All preset records, in file order."""
    return [dict(rec) for rec in _catalog().values()]


def preset_names() -> list[str]:
    return list(_catalog())


def preset(name: str) -> DrudeMaterial:
    recs = _catalog()
    if name not in recs:
        raise KeyError(f"unknown material {name!r}; available presets: {', '.join(recs)}")
    rec = recs[name]
    if rec.get("advisory"):
        warnings.warn(f"{name}: {rec['advisory']}", UserWarning, stacklevel=2)
    return DrudeMaterial(rec["omega_p_eV"], rec["gamma_eV"], rec["rho_g_cm3"], name)
