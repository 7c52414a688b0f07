"""
Command-line interface.

Subcommands: material, force, spectrum, equilibria, levitate, validate.
Exit codes: 0 ok, 1 validation failure, 2 usage error, 3 numerical failure.

Natural-unit columns are keyed to the material: z_natural = z * omega_p and
F_natural = F / (omega_p^5 a^3). The JSON metadata block records omega_p, a and
the conversion constants so every column can be mapped back to eV or SI.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__, equilibria, mirror_force, svg, validation
from .materials import DrudeMaterial, OverdampedError, Sphere, catalog, preset, preset_names, resonance
from .numerics import ConvergenceError, ExtrapolationError
from .units import CONSTANTS, force_natural_to_newtons, length_natural_to_um, length_um_to_natural

EXIT_OK, EXIT_VALIDATION, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2, 3

FORCE_COLUMNS = ("z_natural", "z_um", "J", "P", "F_natural", "F_newtons")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ZRange:
    lo: float
    hi: float
    n: int | None
    unit: str  # "natural" (units of 1/omega_p) or "um"


def parse_range(text: str, unit: str, need_n: bool = False, default_n: int = 200) -> ZRange:
    """Parse ``lo:hi`` or ``lo:hi:n``."""
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise UsageError(f"range must look like lo:hi or lo:hi:n, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        n = int(parts[2]) if len(parts) == 3 else None
    except ValueError:
        raise UsageError(f"malformed range {text!r}") from None
    if not (math.isfinite(lo) and math.isfinite(hi)) or not 0 < lo < hi:
        raise UsageError(f"range must be positive and increasing, got {text!r}")
    if n is None and need_n:
        n = default_n
    if n is not None and n < 2:
        raise UsageError("point count must be >= 2")
    return ZRange(lo, hi, n, unit)


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    material: DrudeMaterial | None
    radius_nm: float
    z_range: ZRange | None
    fmt: str
    output: str | None
    threads: int
    log_x: bool = False
    log_y: bool = False


def _threads() -> int:
    cpu = os.cpu_count() or 1
    env = os.environ.get("CASIMIR_THREADS")
    if env is None:
        return cpu
    try:
        cap = int(env)
    except ValueError:
        raise UsageError(f"CASIMIR_THREADS must be an integer, got {env!r}") from None
    return max(1, min(cpu, cap))


def _material_from_args(args, required_density: bool = False) -> DrudeMaterial:
    name = getattr(args, "material", None)
    inline = getattr(args, "omega_p", None)
    if name is not None and inline is not None:
        raise UsageError("give either --material or --omega-p, not both")
    if name is not None:
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                m = preset(name)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        gamma = m.damping
        rho = m.density if args.rho is None else args.rho
        wp = m.plasma_frequency
    else:
        # the unit material makes natural units read directly in eV
        wp = 1.0 if inline is None else inline
        gamma = 0.0
        rho = args.rho
        name = "inline"
    if args.gamma is not None and args.gamma_ratio is not None:
        raise UsageError("give either --gamma or --gamma-ratio, not both")
    if args.gamma is not None:
        gamma = args.gamma
    if args.gamma_ratio is not None:
        gamma = args.gamma_ratio * wp
    if required_density and rho is None:
        raise UsageError("levitation needs a density: pass --rho or a preset")
    try:
        return DrudeMaterial(wp, gamma, rho, name)
    except (ValueError, OverdampedError) as exc:
        raise UsageError(str(exc)) from None


def _metadata(cfg: RunConfig, extra: dict | None = None) -> dict:
    meta = {
        "library_version": __version__,
        "subcommand": cfg.subcommand,
        "constants": asdict(CONSTANTS),
        "newton_per_eV2": CONSTANTS.newton_per_eV2,
        "um_per_inverse_eV": CONSTANTS.hbar_c,
    }
    if cfg.material is not None:
        m = cfg.material
        a = length_um_to_natural(cfg.radius_nm * 1e-3).value
        meta["material"] = {"name": m.name, "omega_p_eV": m.plasma_frequency, "gamma_eV": m.damping,
                            "rho_g_cm3": m.density}
        meta["radius"] = {"nm": cfg.radius_nm, "inverse_eV": a}
        meta["natural_units"] = {
            "z_natural": "z * omega_p",
            "F_natural": "F / (omega_p^5 a^3)",
            "force_unit_eV2": m.plasma_frequency**5 * a**3,
        }
    if extra:
        meta.update(extra)
    return meta


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))  # shortest round-trip form
    return v


def _json_value(v):
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, np.floating):
        return float(v)
    return v


def _emit(cfg: RunConfig, columns, rows, meta: dict, plot=None) -> None:
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)  # RFC 4180: CRLF line ends, minimal quoting
        w.writerow(columns)
        for r in rows:
            w.writerow([_cell(v) for v in r])
        text = buf.getvalue()
    elif cfg.fmt == "json":
        doc = {"metadata": meta, "columns": list(columns),
               "rows": [{k: _json_value(v) for k, v in zip(columns, r)} for r in rows]}
        text = json.dumps(doc, indent=2, allow_nan=True) + "\n"
    else:
        if plot is None:
            raise UsageError(f"svg output is not available for {cfg.subcommand}")
        text = plot()
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _z_values(cfg: RunConfig) -> np.ndarray:
    r = cfg.z_range
    wp = cfg.material.plasma_frequency
    if r.unit == "natural":
        lo, hi = r.lo / wp, r.hi / wp
    else:
        lo, hi = length_um_to_natural(r.lo).value, length_um_to_natural(r.hi).value
    return np.linspace(lo, hi, r.n)


def cmd_material(cfg: RunConfig, args) -> int:
    cols = ("name", "rho_g_cm3", "omega_p_eV", "gamma_eV", "Omega_eV", "spacing_natural",
            "spacing_um", "advisory")
    names = preset_names() if args.preset in (None, "all") else [args.preset]
    recs = {r["name"]: r for r in catalog()}
    rows = []
    for n in names:
        if n not in recs:
            raise UsageError(f"unknown material {n!r}; available presets: {', '.join(recs)}")
        r = recs[n]
        m = DrudeMaterial(r["omega_p_eV"], r["gamma_eV"], r["rho_g_cm3"], n)
        W = resonance(m).omega
        rows.append((n, r["rho_g_cm3"], r["omega_p_eV"], r["gamma_eV"], W, math.pi / W,
                     length_natural_to_um(math.pi / W), r.get("advisory", "")))
    _emit(cfg, cols, rows, _metadata(cfg))
    return EXIT_OK


def cmd_force_curve(cfg: RunConfig, args) -> int:
    m = cfg.material
    s = Sphere.from_nm(cfg.radius_nm, m)
    zs = _z_values(cfg)
    unit = m.plasma_frequency**5 * s.radius**3
    results = mirror_force.force_curve(s, zs, threads=cfg.threads)
    rows = [(b.z * m.plasma_frequency, length_natural_to_um(b.z), b.J / unit, b.P / unit,
             b.total / unit, force_natural_to_newtons(b.total)) for b in results]

    def plot():
        x = np.array([r[0] for r in rows])
        series = [svg.Series(lbl, x, np.array([r[k] for r in rows]))
                  for lbl, k in (("J", 2), ("P", 3), ("F = J + P", 4))]
        return svg.render(series, title=f"force on sphere ({m.name})", xlabel="z omega_p",
                          ylabel="F / (omega_p^5 a^3)", log_x=cfg.log_x, log_y=cfg.log_y)

    _emit(cfg, FORCE_COLUMNS, rows, _metadata(cfg), plot)
    return EXIT_OK


def spectrum_cumulative(z: float, cutoff):
    """
    Abel-regulated integral of sigma with cutoff Lambda, i.e. beta = 1/Lambda:

        int_0^inf sigma(w) e^{-w/Lambda} dw
          = 4 z^2 Im (b - 2iz)^-3 - Im (b - 2iz)^-1 + 2z Re (b - 2iz)^-2,  b = 1/Lambda,

    which tends to -3/(2z) as Lambda grows (the error is O(1/Lambda^2)).
    """
    lam = np.asarray(cutoff, dtype=float)
    with np.errstate(divide="ignore"):
        b = np.where(lam > 0, 1.0 / np.where(lam > 0, lam, 1.0), np.inf)
    q = b - 2j * z
    with np.errstate(invalid="ignore"):
        val = 4 * z * z * np.imag(q**-3) - np.imag(1 / q) + 2 * z * np.real(q**-2)
    return np.where(np.isfinite(b), val, 0.0)


def cmd_spectrum(cfg: RunConfig, args) -> int:
    if args.z_um is not None:
        z = length_um_to_natural(args.z_um).value
    else:
        z = args.z
    if not z > 0:
        raise UsageError("z must be positive")
    if args.omega is not None:
        parts = args.omega.split(":")
        try:
            lo, hi = float(parts[0]), float(parts[1])
            n = int(parts[2]) if len(parts) > 2 else 501
        except (ValueError, IndexError):
            raise UsageError(f"malformed omega range {args.omega!r}") from None
        if not 0 <= lo < hi or n < 2:
            raise UsageError("omega range must be non-negative and increasing with >= 2 points")
    else:
        lo, hi, n = 0.0, 50.0 / z, 501
    w = np.linspace(lo, hi, n)
    sig = mirror_force.spectrum_sigma(z, w)
    cum = spectrum_cumulative(z, w)
    rad_s = CONSTANTS.eV_joule / _hbar_js()
    rows = [(float(a), float(a) * rad_s, float(b), float(c), float(c) * CONSTANTS.eV_joule)
            for a, b, c in zip(w, sig, cum)]
    cols = ("omega_eV", "omega_rad_s", "sigma", "cumulative_eV", "cumulative_J")

    def plot():
        return svg.render([svg.Series("sigma", w, sig)], title=f"spectrum at z = {z:g} / eV",
                          xlabel="omega (eV)", ylabel="sigma", log_x=cfg.log_x, log_y=cfg.log_y)

    meta = _metadata(cfg, {"z_inverse_eV": z, "z_um": length_natural_to_um(z),
                           "regulated_limit_eV": -1.5 / z,
                           "cumulative": "int sigma exp(-w'/omega) dw' (Abel cutoff at omega)"})
    _emit(cfg, cols, rows, meta, plot)
    return EXIT_OK


def _hbar_js() -> float:
    """hbar in J s from the library constants."""
    return CONSTANTS.hbar_c_m / CONSTANTS.c_light * CONSTANTS.eV_joule


def cmd_equilibria(cfg: RunConfig, args) -> int:
    m = cfg.material
    s = Sphere.from_nm(cfg.radius_nm, m)
    zs = _z_values(cfg) if cfg.z_range.n else None
    r = cfg.z_range
    if r.unit == "natural":
        lo, hi = r.lo / m.plasma_frequency, r.hi / m.plasma_frequency
    else:
        lo, hi = length_um_to_natural(r.lo).value, length_um_to_natural(r.hi).value
    n = None if zs is None else len(zs)
    try:
        pts = equilibria.find_equilibria(s, lo, hi, n)
    except equilibria.ConfigurationError as exc:
        raise UsageError(str(exc)) from None
    cols = ("z_natural", "z_um", "stable", "well_depth_eV", "well_depth_J", "temperature_K",
            "barrier_side")
    rows = []
    for p in pts:
        d = p.well_depth_to_next
        rows.append((p.z * m.plasma_frequency, p.z_um, p.stable, d,
                     None if d is None else d * CONSTANTS.eV_joule, p.temperature_equivalent,
                     p.barrier_side))
    stable = [p.z_um for p in pts if p.stable]
    meta = _metadata(cfg, {"spacing_um": length_natural_to_um(math.pi / resonance(m).omega),
                           "mean_stable_spacing_um": float(np.mean(np.diff(stable))) if len(stable) > 1 else None})
    _emit(cfg, cols, rows, meta)
    return EXIT_OK


def cmd_levitate(cfg: RunConfig, args) -> int:
    if args.preset is not None:
        names = preset_names() if args.preset == "all" else [args.preset]
        mats = []
        for n in names:
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    mats.append(preset(n))
            except KeyError as exc:
                raise UsageError(exc.args[0]) from None
        # presets without damping cannot show the decaying envelope
        mats = [m for m in mats if m.damping > 0] if args.preset == "all" else mats
    else:
        mats = [cfg.material]
    for m in mats:
        if m.density is None:
            raise UsageError(f"material {m.name} has no density; pass --rho")
    coef, expo = equilibria.ratio_coefficients()
    cols = ("material", "rho_g_cm3", "omega_p_eV", "gamma_eV", "spacing_um", "z_c_um",
            "z_c_rounded_um")
    rows = []
    for m in mats:
        s = Sphere.from_nm(cfg.radius_nm, m)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            rep = equilibria.levitation_report(s)
        rows.append((m.name, m.density, m.plasma_frequency, m.damping, rep.spacing_um, rep.z_c_um,
                     rep.z_c_rounded_um))
    meta = _metadata(cfg, {"ratio_coefficient": coef, "ratio_exponent": expo,
                           "rounded_coefficient": equilibria.ROUNDED_COEFFICIENT,
                           "rounded_exponent": equilibria.ROUNDED_EXPONENT})
    _emit(cfg, cols, rows, meta)
    return EXIT_OK


def cmd_validate(cfg: RunConfig, args) -> int:
    checks = validation.run_validation(oracle_points=args.oracle_points)
    rep = validation.report(checks)
    text = json.dumps(rep, indent=2) + "\n"
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if rep["passed"] else EXIT_VALIDATION


def _add_material_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("material")
    g.add_argument("--material", help=f"preset name ({', '.join(preset_names())})")
    g.add_argument("--omega-p", type=float, help="inline plasma frequency in eV")
    g.add_argument("--gamma", type=float, help="damping in eV (overrides the preset)")
    g.add_argument("--gamma-ratio", type=float, help="damping as a fraction of omega_p")
    g.add_argument("--rho", type=float, help="density in g/cm^3")
    p.add_argument("--radius-nm", type=float, default=50.0, help="sphere radius (default 50 nm)")


def _add_output_args(p: argparse.ArgumentParser, svg_ok: bool = True) -> None:
    choices = ("csv", "json", "svg") if svg_ok else ("csv", "json")
    p.add_argument("--format", choices=choices, default="csv")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    if svg_ok:
        p.add_argument("--log-x", action="store_true")
        p.add_argument("--log-y", action="store_true")


def _add_z_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--z-natural", help="lo:hi[:n] in units of 1/omega_p")
    g.add_argument("--z-um", help="lo:hi[:n] in micrometres")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-sphere",
        description="Vacuum force on a small Drude sphere near a mirror.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("material", help="list the material catalog")
    p.add_argument("--preset", help="one preset name or 'all' (default)")
    _add_output_args(p, svg_ok=False)

    p = sub.add_parser("force", help="force curve J, P, F over a z grid")
    _add_material_args(p)
    _add_z_args(p)
    _add_output_args(p)

    p = sub.add_parser("spectrum", help="spectral function sigma(omega) at fixed z")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--z", type=float, default=1.0, help="separation in 1/eV (default 1)")
    g.add_argument("--z-um", type=float, help="separation in micrometres")
    p.add_argument("--omega", help="lo:hi[:n] in eV (default 0:50/z:501)")
    _add_output_args(p)

    p = sub.add_parser("equilibria", help="zeros of the force and well depths")
    _add_material_args(p)
    _add_z_args(p)
    _add_output_args(p, svg_ok=False)

    p = sub.add_parser("levitate", help="levitation table: spacing and maximum height")
    p.add_argument("--preset", help="preset name or 'all'")
    _add_material_args(p)
    _add_output_args(p, svg_ok=False)

    p = sub.add_parser("validate", help="run the self-check suite, JSON report")
    p.add_argument("--oracle-points", type=int, default=8,
                   help="z points per material in the oracle cross-check")
    p.add_argument("--output", "-o")
    return parser


COMMANDS = {
    "material": cmd_material,
    "force": cmd_force_curve,
    "spectrum": cmd_spectrum,
    "equilibria": cmd_equilibria,
    "levitate": cmd_levitate,
    "validate": cmd_validate,
}


def _config(args) -> RunConfig:
    sc = args.subcommand
    material = None
    zr = None
    if sc in ("force", "equilibria"):
        material = _material_from_args(args)
        if args.z_natural is not None:
            zr = parse_range(args.z_natural, "natural", need_n=(sc == "force"))
        else:
            zr = parse_range(args.z_um, "um", need_n=(sc == "force"))
    elif sc == "levitate" and args.preset is None:
        if args.material is None and args.omega_p is None:
            raise UsageError("levitate needs --preset, --material or --omega-p")
        material = _material_from_args(args, required_density=True)
    if getattr(args, "radius_nm", 50.0) <= 0:
        raise UsageError("radius must be positive")
    return RunConfig(
        subcommand=sc,
        material=material,
        radius_nm=getattr(args, "radius_nm", 50.0),
        z_range=zr,
        fmt=getattr(args, "format", "json"),
        output=args.output,
        threads=_threads(),
        log_x=getattr(args, "log_x", False),
        log_y=getattr(args, "log_y", False),
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        return COMMANDS[args.subcommand](cfg, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, ExtrapolationError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
