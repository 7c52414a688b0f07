"""
The point-dipole force law in two limits.

A static induced dipole in a curl-free field feels the gradient of its energy, and
a plane wave pushes an absorbing particle with momentum equal to the absorbed
power divided by c.
"""

import numpy as np

from casimir_sphere import dipole as D

rng = np.random.default_rng(1)
E0 = rng.normal(size=3)
G = rng.normal(size=(3, 3))
G = G + G.T  # curl-free field
alpha0 = 0.7
f = D.dipole_force(D.FieldSample(E0, G, np.zeros(3)), D.DipoleState(alpha0 * E0, np.zeros(3)))
print("static limit   :", f, "vs", D.static_force(E0, G, alpha0))

wave = D.PlaneWave(2.0, [0.0, 0.0, 1.5], [1.0, 0.0, 0.0])
alpha = 0.3 + 0.2j
fs, ds = wave.phasors(alpha)
print("plane wave push:", D.cycle_averaged_force(fs, ds), "vs",
      wave.k / wave.omega * D.absorbed_power(wave, alpha))
