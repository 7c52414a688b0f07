"""
Force from a sum over propagating modes reflected by a general wall.

The wall enters only through its reflection coefficients R e^{i delta} for S and P
polarizations. For a perfect conductor the mode sum must reproduce the closed-form
force; a partially reflecting wall with R < 1 weakens it.
"""

import numpy as np

from casimir_sphere import interface_force as I
from casimir_sphere import mirror_force as M
from casimir_sphere.materials import Sphere, preset

s = Sphere.from_nm(50, preset("Na"))
wp = s.material.plasma_frequency
z = 2.0 / wp

modes = I.interface_force(s, I.PerfectMirror(), z)
closed = M.total_force(s, z).total
print(f"perfect mirror, z*wp = 2: mode sum {modes:.10e}, closed form {closed:.10e}")
print(f"relative difference {abs(modes - closed) / abs(closed):.1e}")

half = I.CallableFresnel(lambda w, c: (0.5, np.pi, 0.5, np.pi))
print(f"R = 0.5 wall: {I.interface_force(s, half, z):.6e} (half of the perfect mirror)")
