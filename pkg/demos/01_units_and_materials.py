"""
Natural units and the Drude materials.

Everything inside the library works with hbar = c = 1 and energies in eV, so
lengths are eV^-1 and forces eV^2. This script converts a few lab quantities and
prints the resonance of each bundled material.
"""

import warnings

from casimir_sphere.materials import preset, preset_names, resonance
from casimir_sphere.units import (
    force_natural_to_newtons,
    length_natural_to_um,
    length_um_to_natural,
)

one_um = length_um_to_natural(1.0)
print(f"1 um       = {one_um.value:.7f} eV^-1")
print(f"1 eV^-1    = {length_natural_to_um(1.0):.6f} um")
print(f"1 eV^2     = {force_natural_to_newtons(1.0):.5e} N")
print()

print(f"{'name':>4} {'wp/eV':>7} {'gamma/eV':>9} {'Omega/eV':>9} {'pi/Omega (um)':>14}")
for name in preset_names():
    with warnings.catch_warnings():
        # Al is a wall reference with unknown damping; its warning is expected here
        warnings.simplefilter("ignore")
        m = preset(name)
    W = resonance(m).omega
    print(f"{name:>4} {m.plasma_frequency:7.3f} {m.damping:9.4f} {W:9.4f} "
          f"{length_natural_to_um(3.141592653589793 / W):14.5f}")
