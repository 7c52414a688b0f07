"""
Trapping points and levitation of a 50 nm alkali sphere.

Zeros of the force with negative slope are stable. Near the wall they are spaced by
pi/Omega; far out the oscillation amplitude falls below the sphere's weight and the
last height where it still wins is the levitation limit z_c.
"""

from casimir_sphere import equilibria as E
from casimir_sphere.materials import Sphere, preset
from casimir_sphere.units import length_natural_to_um

s = Sphere.from_nm(50, preset("Na"))
pts = E.find_equilibria(s, 0.05 / s.material.plasma_frequency, 8.0)
print("first stable points (Na, a = 50 nm):")
for p in [p for p in pts if p.stable][:5]:
    print(f"  z = {p.z_um:.4f} um  barrier {p.well_depth_to_next:.3e} eV  "
          f"~ {p.temperature_equivalent:.0f} K ({p.barrier_side} side)")

print()
coef, expo = E.ratio_coefficients()
print(f"ratio ~ {coef:.4f} wp^4 / (z rho) exp(-{expo:.5f} gamma z)   [eV, um, g/cm^3]")
for name in ("Li", "Na", "K"):
    r = E.levitation_report(Sphere.from_nm(50, preset(name)))
    print(f"  {name}: spacing {r.spacing_um:.3f} um, z_c = {r.z_c_um:.2f} um "
          f"(rounded constants: {r.z_c_rounded_um:.2f} um)")

print()
print(f"barrier temperature near z_c : {E.thermal_near_levitation_limit(s):.3f} K")
print(f"barrier temperature near wall: {E.thermal_near_wall(s):.0f} K")
