import math
import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from casimir_sphere import interface_force as I
from casimir_sphere import mirror_force as M
from casimir_sphere.materials import DrudeMaterial, Sphere, preset


@pytest.fixture(scope="module")
def na():
    return Sphere.from_nm(50, preset("Na"))


def test_mode_force_s_examples():
    assert I.mode_force_s(1, 1, 1, 0.5, math.pi / 2) == pytest.approx(-0.5)
    assert I.mode_force_s(1, 1, 1, 0.5, 0.0) == 0
    assert I.mode_force_s(1, 0, 1, 0.5, 1.0) == 0
    assert I.mode_force_s(1, 1, 1, 0.5, math.pi / 2, omega=3.0) == pytest.approx(-1.5)


def test_mode_force_p_examples():
    assert I.mode_force_p(1, 1, 1, 1.0, math.pi / 2) == pytest.approx(-1.0)
    assert I.mode_force_p(1, 1, 1, 1 / math.sqrt(2), 0.7) == pytest.approx(0, abs=1e-15)
    assert I.mode_force_p(1, 1, 1, 0.3, 0.0) == 0


def test_mode_geometry():
    g = I.ModeGeometry(omega=2.0, c=0.5, z=1.5, delta=math.pi)
    assert g.phase == pytest.approx(3.0 + math.pi)
    with pytest.raises(ValueError):
        I.ModeGeometry(omega=1.0, c=0.0, z=1.0)
    with pytest.raises(ValueError):
        I.ModeGeometry(omega=1.0, c=1.2, z=1.0)


@given(st.floats(0.05, 30), st.floats(0.01, 1.0), st.floats(0.1, 3))
def test_perfect_mirror_reduction_pointwise(w, c, z):
    s = Sphere(0.25, preset("Na"))
    a = I.force_integrand(s, I.PerfectMirror(), z, np.array([w]), c)[0]
    b = I.perfect_mirror_integrand(s, z, np.array([w]), c)[0]
    scale = w**4 * abs(M.alpha1_real(s, w)) * c / math.pi
    # sin(x + pi) = -sin(x) up to rounding of the argument x + pi
    assert abs(a - b) <= 1e-14 * scale * max(1.0, 2 * w * z * c)


def test_zero_reflection_gives_zero(na):
    zero = I.CallableFresnel(lambda w, c: (0.0, 0.0, 0.0, 0.0))
    z = 3 / na.material.omega_p
    assert I.interface_force(na, zero, z, cfg=I.InterfaceConfig(c_nodes=6)) == 0.0
    assert I.interface_potential(na, zero, z, cfg=I.InterfaceConfig(c_nodes=6)) == 0.0


def test_perfect_mirror_matches_closed_form_pipeline(na):
    z = 2 / na.material.omega_p
    F = I.interface_force(na, I.PerfectMirror(), z)
    assert F == pytest.approx(M.total_force(na, z).total, rel=1e-6)


def test_potential_matches_mirror_potential(na):
    z = 5 / na.material.omega_p
    V = I.interface_potential(na, I.PerfectMirror(), z)
    assert V == pytest.approx(M.potential(na, z), rel=1e-6)


def test_force_is_minus_potential_gradient(na):
    W = M.resonance(na.material).omega
    z, h = 5 / na.material.omega_p, 1e-3 / W
    V = lambda x: I.interface_potential(na, I.PerfectMirror(), x)
    dV = -(V(z + h) - V(z - h)) / (2 * h)
    F = I.interface_force(na, I.PerfectMirror(), z)
    assert dV == pytest.approx(F, rel=1e-4)


def test_partial_reflector_scales_linearly(na):
    # R independent of w and c enters linearly
    half = I.CallableFresnel(lambda w, c: (0.5, math.pi, 0.5, math.pi))
    z = 2 / na.material.omega_p
    cfg = I.InterfaceConfig(c_nodes=16)
    full = I.interface_force(na, I.PerfectMirror(), z, cfg=cfg)
    assert I.interface_force(na, half, z, cfg=cfg) == pytest.approx(0.5 * full, rel=1e-10)


def test_absorptive_wall_warns(na):
    m = I.CallableFresnel(lambda w, c: (0.5, 2.0, 0.5, 2.0), absorptive=True)
    with pytest.warns(UserWarning, match="absorptive"):
        I.interface_force(na, m, 2.0, cfg=I.InterfaceConfig(c_nodes=4))


def test_bad_separation(na):
    with pytest.raises(ValueError):
        I.interface_force(na, I.PerfectMirror(), 0.0)


def test_callable_fresnel_range_check():
    bad = I.CallableFresnel(lambda w, c: (1.2, 0.0, 0.5, 0.0))
    with pytest.raises(ValueError):
        bad(np.array([1.0]), 0.5)


def test_transmission():
    m = I.CallableFresnel(lambda w, c: (0.6, 0.0, 0.8, 0.0))
    ts, tp = m.transmission(np.array([1.0]), 0.5)
    assert ts[0] == pytest.approx(0.8)
    assert tp[0] == pytest.approx(0.6)


def _write_table(path, ws, cs, fn):
    lines = [",".join(I.FRESNEL_COLUMNS)]
    for w in ws:
        for c in cs:
            lines.append(",".join(repr(float(v)) for v in (w, c, *fn(w, c))))
    path.write_text("\n".join(lines) + "\n")


def test_tabulated_bilinear(tmp_path):
    ws = np.linspace(0, 10, 11)
    cs = np.linspace(0, 1, 5)
    # bilinear functions are reproduced exactly
    fn = lambda w, c: (0.05 * w * c, 0.1 + w, 0.5, 0.2 * c + 0.01 * w * c)
    p = tmp_path / "wall.csv"
    _write_table(p, ws, cs, fn)
    m = I.TabulatedFresnel.from_csv(p)
    w = np.array([0.3, 4.7, 9.99])
    rs, ds, rp, dp = m(w, 0.37)
    assert np.allclose(rs, 0.05 * w * 0.37)
    assert np.allclose(ds, 0.1 + w)
    assert np.allclose(dp, 0.2 * 0.37 + 0.01 * w * 0.37)
    assert m.omega_max == 10.0


def test_tabulated_range_errors(tmp_path):
    p = tmp_path / "wall.csv"
    _write_table(p, [0.0, 5.0], [0.2, 1.0], lambda w, c: (1, math.pi, 1, math.pi))
    m = I.TabulatedFresnel.from_csv(p)
    with pytest.raises(I.FresnelRangeError):
        m(np.array([6.0]), 0.5)
    with pytest.raises(I.FresnelRangeError):
        m(np.array([1.0]), 0.1)


def test_tabulated_rejects_ragged_grid(tmp_path):
    p = tmp_path / "wall.csv"
    p.write_text(",".join(I.FRESNEL_COLUMNS) + "\n0,0,1,0,1,0\n1,0,1,0,1,0\n0,1,1,0,1,0\n")
    with pytest.raises(ValueError, match="rectangular"):
        I.TabulatedFresnel.from_csv(p)


def test_tabulated_missing_column(tmp_path):
    p = tmp_path / "wall.csv"
    p.write_text("omega_eV,cos_theta,R_S\n0,0,1\n")
    with pytest.raises(ValueError, match="missing"):
        I.TabulatedFresnel.from_csv(p)


def test_tabulated_perfect_mirror_force(tmp_path, na):
    # a perfect mirror written as a table; beyond its last frequency the
    # coefficients are held fixed, so the force is unchanged
    p = tmp_path / "wall.csv"
    _write_table(p, [0.0, 50.0], [0.0, 1.0], lambda w, c: (1, math.pi, 1, math.pi))
    m = I.TabulatedFresnel.from_csv(p)
    z = 2 / na.material.omega_p
    cfg = I.InterfaceConfig(c_nodes=16)
    assert I.interface_force(na, m, z, cfg=cfg) == pytest.approx(
        I.interface_force(na, I.PerfectMirror(), z, cfg=cfg), rel=1e-9)
