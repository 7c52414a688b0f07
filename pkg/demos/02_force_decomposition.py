"""
The sphere-mirror force as a smooth part plus an oscillating part.

J comes from an integral along imaginary frequencies and is always attractive.
P is the residue of the polarizability pole: it oscillates with period pi/Omega and
decays like exp(-gamma z). Their sum is checked against a brute-force evaluation of
the real-frequency integral, regulated by exp(-beta w) and extrapolated to beta = 0.
"""

import numpy as np

from casimir_sphere import mirror_force as M
from casimir_sphere.materials import Sphere, preset

s = Sphere.from_nm(50, preset("Na"))
wp = s.material.plasma_frequency

print(f"{'z*wp':>6} {'J':>12} {'P':>12} {'J+P':>12} {'oracle':>12} {'rel.diff':>9}")
for x in (0.5, 1, 2, 5, 10, 30):
    z = x / wp
    f = M.total_force(s, z)
    ref = M.total_force_oracle(s, z).value
    print(f"{x:6g} {f.J:12.4e} {f.P:12.4e} {f.total:12.4e} {ref:12.4e} {abs(f.total - ref) / abs(ref):9.1e}")

# far out the pole part has died away and J approaches the Casimir-Polder tail
z = 2e4 / wp
print()
print(f"z*wp = 2e4: F / F_CP = {M.total_force(s, z).total / M.casimir_polder_force(s, z):.6f}")
print(f"pole envelope / |J|  = {M.pole_envelope(s, z) / abs(M.j_integral(s, z)):.2e}")

# the spectrum behind the Casimir-Polder limit integrates (with a regulator) to -3/(2z)
for z in (0.3, 3.0):
    print(f"spectrum integral at z={z}: {M.spectrum_integral(z).value:.10f}  (-3/2z = {-1.5 / z:.10f})")
