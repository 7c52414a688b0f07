"""
Natural units (hbar = c = 1) with energies in eV.

Every quantity inside the library is a power of eV: lengths are eV^-1,
forces eV^2, mass densities eV^4 and so on. Conversions to laboratory
units happen only at the edges (CLI, reports).

Lab convention used by :func:`to_lab` / :func:`from_lab`:

    dimension d <= 0  ->  m^(-d)         (1, m, m^2, ...)
    dimension d >= 1  ->  J * m^(1 - d)  (J, N, N/m, ...)
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 values; all exact or recommended values."""

    hbar_c: float = 0.1973269804  # eV um (CODATA 2018: 197.3269804 MeV fm)
    kg_to_eV: float = 5.6095886e35  # eV per kg, i.e. c^2 / e (CODATA 2018)
    g_accel: float = 9.80665  # m s^-2, standard gravity (CGPM 1901, exact)
    boltzmann: float = 8.617333262e-5  # eV / K (CODATA 2018, exact)
    eV_joule: float = 1.602176634e-19  # J per eV (SI 2019, exact)
    c_light: float = 299792458.0  # m/s (exact)

    @property
    def hbar_c_m(self) -> float:
        """hbar*c in eV m."""
        return self.hbar_c * 1e-6

    @property
    def newton_per_eV2(self) -> float:
        """1 eV^2 of force expressed in newtons (~8.1194e-13)."""
        return self.eV_joule / self.hbar_c_m


CONSTANTS = PhysicalConstants()


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class NaturalQuantity:
    """A value carrying an integer power of energy (length = -1, force = +2)."""

    value: float
    dimension: int

    def _check(self, other: "NaturalQuantity") -> None:
        if not isinstance(other, NaturalQuantity):
            raise TypeError("can only combine with another NaturalQuantity")
        if other.dimension != self.dimension:
            raise DimensionError(
                f"cannot combine eV^{self.dimension} with eV^{other.dimension}"
            )

    def __add__(self, other):
        self._check(other)
        return NaturalQuantity(self.value + other.value, self.dimension)

    def __sub__(self, other):
        self._check(other)
        return NaturalQuantity(self.value - other.value, self.dimension)

    def __neg__(self):
        return NaturalQuantity(-self.value, self.dimension)

    def __mul__(self, other):
        if isinstance(other, NaturalQuantity):
            return NaturalQuantity(self.value * other.value, self.dimension + other.dimension)
        return NaturalQuantity(self.value * other, self.dimension)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, NaturalQuantity):
            return NaturalQuantity(self.value / other.value, self.dimension - other.dimension)
        return NaturalQuantity(self.value / other, self.dimension)

    def __float__(self) -> float:
        return float(self.value)


def length_um_to_natural(z_um: float, constants: PhysicalConstants = CONSTANTS) -> NaturalQuantity:
    """Length in micrometres -> eV^-1."""
    if not z_um > 0:
        raise ValueError(f"length must be positive, got {z_um!r}")
    return NaturalQuantity(z_um / constants.hbar_c, -1)


def length_natural_to_um(z: float, constants: PhysicalConstants = CONSTANTS) -> float:
    return float(z) * constants.hbar_c


def length_nm_to_natural(a_nm: float, constants: PhysicalConstants = CONSTANTS) -> float:
    return length_um_to_natural(a_nm * 1e-3, constants).value


def force_natural_to_newtons(f: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Force in eV^2 -> N."""
    return float(f) * constants.newton_per_eV2


def force_newtons_to_natural(f_newton: float, constants: PhysicalConstants = CONSTANTS) -> float:
    return float(f_newton) / constants.newton_per_eV2


def energy_to_kelvin(e: float, constants: PhysicalConstants = CONSTANTS) -> float:
    return float(e) / constants.boltzmann


def density_gcc_to_natural(rho: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Mass density in g/cm^3 -> eV^4."""
    kg_m3 = rho * 1e3
    return kg_m3 * constants.kg_to_eV * constants.hbar_c_m**3


def acceleration_si_to_natural(acc: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Acceleration in m/s^2 -> eV (hbar*acc/c)."""
    return float(acc) * constants.hbar_c_m / constants.c_light**2


def _lab_factor(dimension: int, constants: PhysicalConstants) -> float:
    # lab value = natural value * factor
    if dimension <= 0:
        return constants.hbar_c_m ** (-dimension)
    return constants.eV_joule * constants.hbar_c_m ** (1 - dimension)


def to_lab(q: NaturalQuantity, constants: PhysicalConstants = CONSTANTS) -> float:
    return q.value * _lab_factor(q.dimension, constants)


def from_lab(value: float, dimension: int, constants: PhysicalConstants = CONSTANTS) -> NaturalQuantity:
    return NaturalQuantity(value / _lab_factor(dimension, constants), dimension)
