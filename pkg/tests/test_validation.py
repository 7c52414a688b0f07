import dataclasses

from casimir_sphere import validation
from casimir_sphere.units import CONSTANTS


def test_fault_injection_breaks_unit_check():
    bad = dataclasses.replace(CONSTANTS, hbar_c=CONSTANTS.hbar_c * (1 + 1e-6))
    checks = validation._unit_round_trip(bad)
    assert not checks[0].passed
    assert validation._unit_round_trip(CONSTANTS)[0].passed


def test_report_flags_failure():
    good = validation.Check("a", 1.0, 1.0, 1e-9)
    bad = validation.Check("b", 1.0, 2.0, 1e-9)
    assert validation.report([good])["passed"]
    assert not validation.report([good, bad])["passed"]
    assert not validation.Check("c", 1.0, float("nan"), 1.0).passed


def test_full_run_with_injected_constants_fails():
    bad = dataclasses.replace(CONSTANTS, hbar_c=CONSTANTS.hbar_c * 1.001)
    rep = validation.report(validation.run_validation(bad, oracle_points=2))
    assert not rep["passed"]
    failed = [c["name"] for c in rep["checks"] if not c["pass"]]
    assert failed == ["units.um_round_trip"]
