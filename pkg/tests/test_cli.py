import csv
import io
import json
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from scipy.optimize import brentq

from casimir_sphere import cli


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_material_listing(capsys):
    code, out, _ = run(["material"], capsys)
    assert code == 0
    recs = rows(out)
    assert [r["name"] for r in recs][:3] == ["Li", "Na", "K"]
    assert float(recs[1]["spacing_um"]) == pytest.approx(0.19174, abs=1e-5)


def test_material_unknown(capsys):
    code, _, err = run(["material", "--preset", "Xx"], capsys)
    assert code == 2 and "available" in err


def test_force_curve_columns_and_shape(capsys):
    code, out, _ = run(["force", "--gamma-ratio", "0.005", "--z-natural", "1:20:400"], capsys)
    assert code == 0
    header = out.splitlines()[0]
    assert header == ",".join(cli.FORCE_COLUMNS)
    r = rows(out)
    assert len(r) == 400
    J = np.array([float(x["J"]) for x in r])
    P = np.array([float(x["P"]) for x in r])
    z = np.array([float(x["z_natural"]) for x in r])
    assert np.all(J < 0)
    assert np.all(np.diff(J[z > 2]) > 0)
    assert np.count_nonzero(np.diff(np.sign(P))) >= 5
    F = np.array([float(x["F_natural"]) for x in r])
    assert np.allclose(F, J + P, rtol=1e-12, atol=1e-15)


def test_csv_uses_crlf(capsys):
    _, out, _ = run(["force", "--z-natural", "1:2:2"], capsys)
    assert out.count("\r\n") == 3


def test_force_deterministic(capsys):
    argv = ["force", "--material", "K", "--z-um", "0.2:1:25"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_force_newtons_column(capsys):
    _, out, _ = run(["force", "--material", "Na", "--z-um", "0.5:1:2", "--format", "json"], capsys)
    doc = json.loads(out)
    meta = doc["metadata"]
    r = doc["rows"][0]
    assert r["F_newtons"] == pytest.approx(
        r["F_natural"] * meta["natural_units"]["force_unit_eV2"] * meta["newton_per_eV2"], rel=1e-12)
    assert r["z_um"] == pytest.approx(r["z_natural"] / 5.6 * meta["um_per_inverse_eV"], rel=1e-12)
    assert meta["library_version"]


@pytest.mark.parametrize("argv", [
    ["force", "--z-natural", "5:1:10"],
    ["force", "--z-natural", "1:5:1"],
    ["force", "--z-natural", "a:b"],
    ["force", "--z-natural", "0:5:10"],
    ["force"],
    ["force", "--material", "Na", "--omega-p", "3", "--z-um", "1:2"],
    ["force", "--gamma-ratio", "5", "--z-natural", "1:2"],
    ["nonsense"],
])
def test_usage_errors(argv, capsys):
    code, _, _ = run(argv, capsys)
    assert code == 2


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("CASIMIR_THREADS", "two")
    assert run(["force", "--z-natural", "1:2:2"], capsys)[0] == 2
    monkeypatch.setenv("CASIMIR_THREADS", "2")
    assert run(["force", "--z-natural", "1:2:2"], capsys)[0] == 0


def test_numerical_failure_exit(monkeypatch, capsys):
    from casimir_sphere.numerics import ConvergenceError

    def boom(*a, **k):
        raise ConvergenceError("forced")

    monkeypatch.setattr(cli.mirror_force, "force_curve", boom)
    assert run(["force", "--z-natural", "1:2:2"], capsys)[0] == 3


def test_svg_output(capsys, tmp_path):
    p = tmp_path / "f.svg"
    code, _, _ = run(["force", "--material", "Na", "--z-um", "0.2:1:40", "--format", "svg",
                      "-o", str(p)], capsys)
    assert code == 0
    root = ET.parse(p).getroot()
    assert root.tag.endswith("svg") and root.get("version") == "1.1"
    assert len(root.findall("{http://www.w3.org/2000/svg}polyline")) >= 3


def test_spectrum(capsys):
    z = 1.5
    code, out, _ = run(["spectrum", "--z", str(z), "--omega", "0:20:4001"], capsys)
    assert code == 0
    r = rows(out)
    assert float(r[0]["sigma"]) == 0 and float(r[0]["omega_eV"]) == 0
    w = np.array([float(x["omega_eV"]) for x in r])
    s = np.array([float(x["sigma"]) for x in r])
    first = w[np.argmax(np.sign(s[1:]) != np.sign(s[1]))]
    # first zero of (u^2/2 - 1) sin u + u cos u, u = 2 w z
    u0 = brentq(lambda u: (u * u / 2 - 1) * math.sin(u) + u * math.cos(u), 1.0, 3.0)
    assert first == pytest.approx(u0 / (2 * z), abs=20 / 4000)


def test_spectrum_cumulative_limit(capsys):
    z = 0.8
    _, out, _ = run(["spectrum", "--z", str(z), "--omega", "0:2000:3"], capsys)
    last = rows(out)[-1]
    assert float(last["cumulative_eV"]) == pytest.approx(-1.5 / z, rel=1e-4)


def test_spectrum_cumulative_matches_numeric_regulated_integral():
    from casimir_sphere.mirror_force import spectrum_sigma
    from casimir_sphere.numerics.regulated import regulated_samples

    z, lam = 0.9, 7.0
    num = regulated_samples(lambda w: spectrum_sigma(z, w), z, [1 / lam])[0]
    assert cli.spectrum_cumulative(z, lam) == pytest.approx(num, rel=1e-10)


def test_levitate_all(capsys):
    code, out, _ = run(["levitate", "--preset", "all"], capsys)
    assert code == 0
    r = {x["material"]: x for x in rows(out)}
    assert set(r) == {"Li", "Na", "K"}
    for name, ell, zc in (("Li", 0.16, 49), ("Na", 0.19, 46), ("K", 0.28, 47)):
        assert float(r[name]["spacing_um"]) == pytest.approx(ell, abs=0.005)
        assert float(r[name]["z_c_um"]) == pytest.approx(zc, abs=1.5)


def test_levitate_missing_density(capsys):
    assert run(["levitate", "--omega-p", "3", "--gamma", "0.01"], capsys)[0] == 2


def test_levitate_inline(capsys):
    code, out, _ = run(["levitate", "--omega-p", "5.6", "--gamma", "0.028", "--rho", "0.97",
                        "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["rows"][0]["z_c_um"] == pytest.approx(45.4, abs=0.1)


def test_equilibria_spacing(capsys):
    code, out, _ = run(["equilibria", "--material", "Na", "--z-um", "0.1:2"], capsys)
    assert code == 0
    r = rows(out)
    z = np.array([float(x["z_um"]) for x in r if x["stable"] == "true"])
    gaps = np.diff(z)
    assert np.median(gaps) == pytest.approx(0.19, abs=0.005)


def test_equilibria_coarse_grid(capsys):
    assert run(["equilibria", "--material", "Na", "--z-um", "0.1:2:5"], capsys)[0] == 2


def test_validate_passes(capsys):
    code, out, _ = run(["validate", "--oracle-points", "3"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    names = [c["name"] for c in doc["checks"]]
    assert sum("oracle" in n for n in names) == 9
    for c in doc["checks"]:
        assert {"name", "expected", "actual", "tolerance", "pass"} <= set(c)
