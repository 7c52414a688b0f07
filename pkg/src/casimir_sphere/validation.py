"""
Self-check suite: cross-algorithm agreement, asymptotics and reduction identities.

Each check yields a :class:`Check` with the expected value, the value actually
computed and the tolerance; :func:`run_validation` collects them all.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np
from scipy import constants as sc

from . import dipole, interface_force, mirror_force
from .materials import DrudeMaterial, Sphere, preset
from .units import CONSTANTS, PhysicalConstants, length_um_to_natural


@dataclass(frozen=True)
class Check:
    name: str
    expected: float
    actual: float
    tolerance: float
    relative: bool = True

    @property
    def error(self) -> float:
        diff = abs(self.actual - self.expected)
        return diff / abs(self.expected) if self.relative and self.expected != 0 else diff

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.actual) and self.error <= self.tolerance)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["error"] = self.error
        d["pass"] = self.passed
        return d


def _unit_round_trip(constants: PhysicalConstants) -> list[Check]:
    # reference hbar*c from scipy, independent of the library's constant table
    hbar_c_ref = sc.hbar * sc.c / sc.e * 1e6  # eV um
    z = length_um_to_natural(1.0, constants).value
    return [Check("units.um_round_trip", 1.0, z * hbar_c_ref, 1e-9)]


def _oracle_grid(s: Sphere, points: int) -> list[Check]:
    wp = s.material.plasma_frequency
    out = []
    for x in np.geomspace(0.5, 30, points):
        z = x / wp
        out.append(Check(f"mirror.oracle[z*wp={x:.4g}]", mirror_force.total_force(s, z).total,
                         mirror_force.total_force_oracle(s, z).value, 1e-4))
    return out


def _asymptotics() -> list[Check]:
    s0 = Sphere(1.0, DrudeMaterial(1.0, 0.0))
    z = 0.01
    small = mirror_force.total_force(s0, z).total * 6 * np.pi * z**3
    s = Sphere(1.0, DrudeMaterial(1.0, 0.005))
    zl = 5000.0
    cp = mirror_force.j_integral(s, zl) / mirror_force.casimir_polder_force(s, zl)
    return [
        Check("mirror.small_z_repulsion", 1.0, small, 0.05),
        Check("mirror.casimir_polder_limit", 1.0, cp, 0.01),
    ]


def _identities() -> list[Check]:
    s = Sphere(0.25, DrudeMaterial(5.6, 0.0))
    z = 3 / 5.6
    out = [Check("mirror.j_sici", mirror_force.j_integral_sici(s, z), mirror_force.j_integral(s, z), 1e-9)]
    sn = Sphere(0.25, preset("Na"))
    w = np.linspace(0.1, 20, 41)
    worst = 0.0
    for c in (0.1, 0.5, 0.9):
        a = interface_force.force_integrand(sn, interface_force.PerfectMirror(), 0.7, w, c)
        b = interface_force.perfect_mirror_integrand(sn, 0.7, w, c)
        worst = max(worst, float(np.max(np.abs(a - b) / np.max(np.abs(b)))))
    out.append(Check("interface.perfect_mirror_reduction", 0.0, worst, 1e-14, relative=False))
    for z in (0.37, 2.9):
        out.append(Check(f"mirror.spectrum_integral[z={z}]", -1.5 / z,
                         mirror_force.spectrum_integral(z).value, 1e-6))
    rng = np.random.default_rng(7)
    worst_static = worst_rad = 0.0
    for _ in range(200):
        E = rng.normal(size=3)
        G = rng.normal(size=(3, 3))
        G = G + G.T
        a0 = rng.uniform(0.1, 2)
        fs = dipole.FieldSample(E, G, rng.normal(size=3))
        f = dipole.dipole_force(fs, dipole.DipoleState(a0 * E, np.zeros(3)))
        ref = dipole.static_force(E, G, a0)
        worst_static = max(worst_static, float(np.max(np.abs(f - ref)) / np.max(np.abs(ref))))
        k = rng.normal(size=3)
        e = np.cross(k, rng.normal(size=3))
        wave = dipole.PlaneWave(rng.uniform(0.1, 3), k, e / np.linalg.norm(e))
        alpha = complex(rng.normal(), rng.uniform(0, 2))
        lhs = dipole.plane_wave_force(wave, alpha)
        rhs = wave.k / wave.omega * dipole.absorbed_power(wave, alpha)
        worst_rad = max(worst_rad, float(np.max(np.abs(lhs - rhs)) / max(np.max(np.abs(rhs)), 1e-300)))
    out.append(Check("dipole.static_limit", 0.0, worst_static, 1e-12, relative=False))
    out.append(Check("dipole.radiation_pressure_vs_power", 0.0, worst_rad, 1e-12, relative=False))
    return out


def run_validation(constants: PhysicalConstants = CONSTANTS, oracle_points: int = 8) -> list[Check]:
    """All checks. ``constants`` only feeds the unit checks (fault injection in tests)."""
    checks = _unit_round_trip(constants)
    checks += _identities()
    checks += _asymptotics()
    for name in ("Li", "Na", "K"):
        s = Sphere.from_nm(50, preset(name))
        checks += [Check(f"{name}.{c.name}", c.expected, c.actual, c.tolerance)
                   for c in _oracle_grid(s, oracle_points)]
    return checks


def report(checks: list[Check]) -> dict:
    return {
        "passed": all(c.passed for c in checks),
        "checks": [c.as_dict() for c in checks],
    }
