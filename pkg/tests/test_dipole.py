import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from casimir_sphere.dipole import (
    DipoleState,
    FieldSample,
    PlaneWave,
    absorbed_power,
    cycle_averaged_force,
    dipole_force,
    plane_wave_force,
    static_force,
)

vec = arrays(float, 3, elements=st.floats(-5, 5))
mat = arrays(float, (3, 3), elements=st.floats(-5, 5))


def test_zero_dipole_gives_zero_force():
    fs = FieldSample(np.ones(3), np.eye(3), np.ones(3))
    assert np.all(dipole_force(fs, DipoleState(np.zeros(3), np.zeros(3))) == 0)


@given(vec, mat, vec, vec, vec, vec, vec, st.floats(-3, 3), st.floats(-3, 3))
def test_linear_in_dipole_state(E, G, B, p1, d1, p2, d2, a, b):
    fs = FieldSample(E, G, B)
    lhs = dipole_force(fs, DipoleState(a * p1 + b * p2, a * d1 + b * d2))
    rhs = a * dipole_force(fs, DipoleState(p1, d1)) + b * dipole_force(fs, DipoleState(p2, d2))
    assert np.allclose(lhs, rhs, rtol=1e-10, atol=1e-9)


def test_static_limit_gradient_of_energy():
    # E = grad of a quadratic potential, so gradE is symmetric; compare with a
    # finite-difference gradient of (alpha0/2)|E|^2
    rng = np.random.default_rng(3)
    H = rng.normal(size=(3, 3))
    H = H + H.T
    E0 = rng.normal(size=3)
    field = lambda r: E0 + H @ r
    a0 = 0.7
    h = 1e-6
    grad = np.array([(a0 / 2) * (field(h * e) @ field(h * e) - field(-h * e) @ field(-h * e)) / (2 * h)
                     for e in np.eye(3)])
    f = dipole_force(FieldSample(E0, H, np.zeros(3)), DipoleState(a0 * E0, np.zeros(3)))
    assert np.allclose(f, grad, rtol=1e-8)
    assert np.allclose(static_force(E0, H, a0), grad, rtol=1e-8)


def test_plane_wave_force_example():
    w = PlaneWave(1.0, [0, 0, 2.5], [1, 0, 0])
    f = plane_wave_force(w, 0.8j)
    assert np.allclose(f, [0, 0, 0.4 * 2.5])


def test_lossless_particle_feels_no_push():
    w = PlaneWave(2.0, [1.0, 1.0, 0], np.array([0, 0, 1.0]))
    assert np.all(plane_wave_force(w, 3.0) == 0)
    assert absorbed_power(w, 3.0) == 0


def test_absorbed_power_arithmetic():
    w = PlaneWave(2.0, [0, 3.0, 0], [1, 0, 0])
    assert absorbed_power(w, 1.0 + 0.5j) == pytest.approx(3.0)


def test_cycle_average_matches_numeric_time_average():
    w = PlaneWave(1.3, [0.4, -0.2, 1.7], None or np.cross([0.4, -0.2, 1.7], [1, 0, 0]) /
                  np.linalg.norm(np.cross([0.4, -0.2, 1.7], [1, 0, 0])), phase=0.4)
    alpha = 0.3 + 0.7j
    fs, ds = w.phasors(alpha)
    ts = np.linspace(0, 2 * np.pi / w.omega, 257)[:-1]
    acc = np.zeros(3)
    for t in ts:
        ph = np.exp(-1j * w.omega * t)
        acc += dipole_force(FieldSample((fs.E0 * ph).real, (fs.gradE * ph).real, (fs.B0 * ph).real),
                            DipoleState((ds.p * ph).real, (ds.p_dot * ph).real))
    numeric = acc / len(ts)
    assert np.allclose(cycle_averaged_force(fs, ds), numeric, rtol=1e-12, atol=1e-14)
    assert np.allclose(plane_wave_force(w, alpha), numeric, rtol=1e-12, atol=1e-14)


@pytest.mark.parametrize("kw", [
    dict(amplitude=1.0, k=[0, 0, 1.0], polarization=[1, 0, 0.001]),
    dict(amplitude=1.0, k=[0, 0, 1.0], polarization=[0, 0, 1.0]),
    dict(amplitude=1.0, k=[0, 0, 0.0], polarization=[1, 0, 0]),
    dict(amplitude=float("nan"), k=[0, 0, 1.0], polarization=[1, 0, 0]),
])
def test_plane_wave_validation(kw):
    with pytest.raises(ValueError):
        PlaneWave(**kw)


def test_field_sample_validation():
    with pytest.raises(ValueError):
        FieldSample([1, 2], np.eye(3), [0, 0, 0])
    with pytest.raises(ValueError):
        FieldSample([1, 2, np.inf], np.eye(3), [0, 0, 0])
    with pytest.raises(ValueError):
        FieldSample([1, 2, 3], np.eye(2), [0, 0, 0])
    with pytest.raises(ValueError):
        DipoleState([1, 2, 3], [0, np.nan, 0])
