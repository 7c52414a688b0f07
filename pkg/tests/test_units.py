import math

import pytest
from hypothesis import given, strategies as st
from scipy import constants as sc

from casimir_sphere import units as u


def test_hbar_c_matches_scipy():
    ref = sc.hbar * sc.c / sc.e * 1e6  # eV um
    assert u.CONSTANTS.hbar_c == pytest.approx(ref, rel=1e-9)


def test_micrometre_in_inverse_ev():
    # 1 um = 1 / 0.1973269804 eV^-1
    assert u.length_um_to_natural(1.0).value == pytest.approx(5.067730717679396, rel=1e-12)


def test_newton_per_ev2_against_scipy():
    ref = sc.e / (sc.hbar * sc.c / sc.e)  # J/eV divided by (eV m)
    assert u.CONSTANTS.newton_per_eV2 == pytest.approx(ref, rel=1e-9)
    assert u.CONSTANTS.newton_per_eV2 == pytest.approx(8.1194e-13, rel=1e-4)


def test_boltzmann_matches_scipy():
    assert u.CONSTANTS.boltzmann == pytest.approx(sc.k / sc.e, rel=1e-12)


def test_kg_to_ev_matches_scipy():
    assert u.CONSTANTS.kg_to_eV == pytest.approx(sc.c**2 / sc.e, rel=1e-7)


def test_non_positive_length_rejected():
    with pytest.raises(ValueError):
        u.length_um_to_natural(0.0)
    with pytest.raises(ValueError):
        u.length_um_to_natural(-1.0)


def test_energy_to_kelvin():
    assert u.energy_to_kelvin(8.617333262e-5) == pytest.approx(1.0, rel=1e-12)


def test_density_conversion():
    # 1 g/cm^3 = 1000 kg/m^3, times c^2/e, times (hbar c)^3 in m^3
    rho = u.density_gcc_to_natural(1.0)
    ref = 1000 * sc.c**2 / sc.e * (sc.hbar * sc.c / sc.e) ** 3
    assert rho == pytest.approx(ref, rel=1e-7)


def test_acceleration_conversion():
    ref = 9.80665 * sc.hbar / sc.c / sc.e  # hbar g / c in eV
    assert u.acceleration_si_to_natural(9.80665) == pytest.approx(ref, rel=1e-8)


def test_dimension_mismatch():
    a = u.NaturalQuantity(1.0, -1)
    b = u.NaturalQuantity(1.0, 2)
    with pytest.raises(u.DimensionError):
        a + b
    assert (a * b).dimension == 1
    assert (b / a).dimension == 3


@given(st.floats(1e-6, 1e6), st.integers(-3, 4))
def test_lab_round_trip(value, dim):
    q = u.NaturalQuantity(value, dim)
    back = u.from_lab(u.to_lab(q), dim)
    assert back.dimension == dim
    assert math.isclose(back.value, value, rel_tol=1e-12)


def test_force_round_trip():
    assert u.force_newtons_to_natural(u.force_natural_to_newtons(3.7)) == pytest.approx(3.7, rel=1e-14)


def test_length_lab_is_metres():
    z = u.length_um_to_natural(2.5)
    assert u.to_lab(z) == pytest.approx(2.5e-6, rel=1e-14)
