"""Command-line interface: ``energypile {solve,figure,sweep,validate,claims}``.

Configs are INI files whose keys carry their units, e.g.::

    [pile]
    L_m = 26
    d_m = 1            ; or p_m and A_m2
    [material]
    E_GPa = 29.2
    alpha_per_C = 1e-5
    [soil]
    ks_GPa_per_m = 0.0167
    [restraints]
    tip = end_bearing  ; or fully_floating
    kh_GPa_per_m = 0
    [load]
    F_kN = -1000
    dT_C = -10
    [grid]
    nodes = 1001
    [output]
    profile = profile.csv
    summary = profile.summary.json

This module is the only place engineering units are converted to SI.

Exit codes: 0 success, 1 validation gate or claim failure, 2 bad input,
3 I/O error.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from decimal import Decimal
from pathlib import Path
from typing import Optional

import numpy as np

from . import analytic, oracle, study
from .analytic import Component
from .model import (
    DEFAULT_NODES,
    CaseDefinition,
    LoadCase,
    PileMaterial,
    PileSection,
    RestraintSet,
    Tip,
    ValidationError,
    Violation,
    build_circular_section,
    build_uniform_grid,
    validate_case,
)

EXIT_OK, EXIT_GATE, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3

GPA = 10**9
KN = 10**3


def to_si(value: float, factor: int) -> float:
    """Correctly rounded ``value * factor`` for the decimal ``value`` as written."""
    return float(Decimal(repr(float(value))) * factor)


PROFILE_COLUMNS = ("x_m", "depth_m", "u_m", "eps", "sigma_Pa", "tau_Pa", "component")
SWEEP_VALUE_COLUMNS = {"head_stiffness": "kh_GPa_per_m", "temperature": "dT_C", "force": "F_kN"}
SWEEP_COLUMNS = (
    "head_displacement_m",
    "tip_displacement_m",
    "head_stress_Pa",
    "tip_stress_Pa",
    "null_point_m",
    "tension_lo_m",
    "tension_hi_m",
)

_SCHEMA = {
    "pile": {"L_m", "d_m", "p_m", "A_m2"},
    "material": {"E_GPa", "alpha_per_C"},
    "soil": {"ks_GPa_per_m"},
    "restraints": {"tip", "kh_GPa_per_m"},
    "load": {"F_kN", "dT_C"},
    "grid": {"nodes"},
    "output": {"profile", "summary"},
}
_REQUIRED = {
    ("pile", "L_m"),
    ("material", "E_GPa"),
    ("material", "alpha_per_C"),
    ("soil", "ks_GPa_per_m"),
    ("restraints", "tip"),
}


@dataclass(frozen=True)
class RunConfig:
    """A config file in engineering units, exactly as written."""

    L_m: float
    E_GPa: float
    alpha_per_C: float
    ks_GPa_per_m: float
    tip: Tip
    kh_GPa_per_m: float = 0.0
    F_kN: float = 0.0
    dT_C: float = 0.0
    d_m: Optional[float] = None
    p_m: Optional[float] = None
    A_m2: Optional[float] = None
    nodes: int = DEFAULT_NODES
    profile: Optional[str] = None
    summary: Optional[str] = None

    def to_case(self) -> CaseDefinition:
        if self.d_m is not None:
            section = build_circular_section(self.d_m, self.L_m)
        else:
            section = PileSection(self.L_m, self.p_m, self.A_m2)
        case = CaseDefinition(
            section=section,
            material=PileMaterial(to_si(self.E_GPa, GPA), self.alpha_per_C),
            restraints=RestraintSet(to_si(self.ks_GPa_per_m, GPA), to_si(self.kh_GPa_per_m, GPA), self.tip),
            load=LoadCase(to_si(self.F_kN, KN), self.dT_C),
            grid=build_uniform_grid(self.L_m, self.nodes),
        )
        return validate_case(case)


def parse_config(text: str) -> RunConfig:
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"), interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ValidationError([Violation("MalformedConfig", "config", str(exc).splitlines()[0])]) from None

    bad, flat = [], {}
    for section in parser.sections():
        if section not in _SCHEMA:
            bad.append(Violation("UnknownKey", section, "unknown section"))
            continue
        for key, value in parser.items(section):
            if key not in _SCHEMA[section]:
                bad.append(Violation("UnknownKey", f"{section}.{key}", "unknown key"))
            else:
                flat[(section, key)] = value.strip()
    for req in sorted(_REQUIRED - flat.keys()):
        bad.append(Violation("MissingKey", ".".join(req), "required"))
    has_d = ("pile", "d_m") in flat
    has_pa = ("pile", "p_m") in flat and ("pile", "A_m2") in flat
    if has_d == has_pa:
        bad.append(Violation("MissingKey", "pile", "give either d_m or both p_m and A_m2"))

    values = {}
    for (section, key), raw in flat.items():
        if section == "output":
            values[key] = raw
        elif key == "tip":
            try:
                values[key] = Tip(raw)
            except ValueError:
                bad.append(Violation("InvalidValue", "restraints.tip", f"{raw!r} is not one of {[t.value for t in Tip]}"))
        elif key == "nodes":
            try:
                values[key] = int(raw)
            except ValueError:
                bad.append(Violation("InvalidValue", "grid.nodes", f"{raw!r} is not an integer"))
        else:
            try:
                values[key] = float(raw)
            except ValueError:
                bad.append(Violation("InvalidValue", f"{section}.{key}", f"{raw!r} is not a number"))
            else:
                if not math.isfinite(values[key]):
                    bad.append(Violation("NonFiniteParameter", f"{section}.{key}", "must be finite"))
    if bad:
        raise ValidationError(bad)
    if has_d:
        values.pop("p_m", None)
        values.pop("A_m2", None)
    return RunConfig(**values)


def load_config(path) -> RunConfig:
    return parse_config(Path(path).read_text())


# -- output helpers ----------------------------------------------------------


def _num(v) -> str:
    return repr(float(v))


def _atomic_write(path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def _json_text(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def profile_rows(result: study.ScenarioResult):
    for prof in (result.thermal, result.mechanical, result.combined):
        for x, z, u, e, s, t in zip(prof.x, prof.depth, prof.displacement, prof.strain, prof.stress, prof.shear):
            yield (_num(x), _num(z), _num(u), _num(e), _num(s), _num(t), prof.component.value)


def summary_dict(case: CaseDefinition, s: analytic.DerivedSummary) -> dict:
    return {
        "tip": case.tip.value,
        "kh_Pa_per_m": case.restraints.head_stiffness,
        "F_N": case.load.head_force,
        "dT_C": case.load.temperature_change,
        "psi_per_m": s.psi,
        "psi_L": s.psi_L,
        "null_point_m": s.null_point,
        "equivalent_dT_C": s.equivalent_dT,
        "head_displacement_m": s.head_displacement,
        "tip_displacement_m": s.tip_displacement,
        "head_stress_Pa": s.head_stress,
        "tip_stress_Pa": s.tip_stress,
        "tension_zone_m": list(s.tension_zone) if s.tension_zone else None,
        "max_tensile_stress_Pa": s.max_tensile_stress,
    }


# -- commands ----------------------------------------------------------------


def cmd_solve(config_path, output=None, summary_path=None) -> int:
    cfg = load_config(config_path)
    case = cfg.to_case()
    output = output or cfg.profile
    if output is None:
        raise ValidationError([Violation("MissingKey", "output.profile", "no output path given")])
    summary_path = summary_path or cfg.summary or str(Path(output).with_suffix(".summary.json"))
    result = study.run_scenario(case.load, case)
    _atomic_write(output, _csv_text(PROFILE_COLUMNS, profile_rows(result)))
    _atomic_write(summary_path, _json_text(summary_dict(case, result.summary)))
    print(f"wrote {output} and {summary_path}")
    return EXIT_OK


def _slug(label: str) -> str:
    return "".join(c if c.isalnum() or c == "." else "_" for c in label).strip("_")


def cmd_figure(figure_id, output_dir) -> int:
    try:
        data = study.figure_dataset(figure_id)
    except study.UnknownFigureError as exc:
        raise ValidationError([Violation("UnknownFigure", "id", str(exc.args[0]))]) from None
    out = Path(output_dir)
    manifest = {"figure": data.figure_id, "title": data.title, "series": []}
    for s in data.series:
        name = f"figure{data.figure_id}_{_slug(s.label)}.csv"
        rows = ((_num(z), _num(v)) for z, v in zip(s.depth, s.values))
        _atomic_write(out / name, _csv_text(("depth_m", f"{s.quantity}_{s.unit}"), rows))
        manifest["series"].append({"label": s.label, "file": name, "quantity": s.quantity, "unit": s.unit})
    _atomic_write(out / "manifest.json", _json_text(manifest))
    print(f"figure {data.figure_id}: {len(data.series)} series in {out}")
    return EXIT_OK


_SWEEP_TO_SI = {"head_stiffness": GPA, "temperature": 1, "force": KN}


def cmd_sweep(config_path, parameter, values, output) -> int:
    if parameter not in _SWEEP_TO_SI:
        raise ValidationError([Violation("UnknownParameter", "parameter", f"{parameter!r} not in {sorted(_SWEEP_TO_SI)}")])
    if not values:
        raise ValidationError([Violation("EmptySweep", "values", "at least one value is required")])
    case = load_config(config_path).to_case()
    spec = study.SweepSpec(case, parameter, [to_si(v, _SWEEP_TO_SI[parameter]) for v in values])
    summaries = study.sweep(spec)
    rows = []
    for v, s in zip(values, summaries):
        lo, hi = s.tension_zone if s.tension_zone else ("", "")
        rows.append([_num(v)] + [_num(x) for x in (s.head_displacement, s.tip_displacement, s.head_stress, s.tip_stress, s.null_point)]
                    + [lo if lo == "" else _num(lo), hi if hi == "" else _num(hi)])
    _atomic_write(output, _csv_text((SWEEP_VALUE_COLUMNS[parameter],) + SWEEP_COLUMNS, rows))
    print(f"wrote {len(rows)} rows to {output}")
    return EXIT_OK


MAX_REL_ERROR = 1e-5
ORDER_BAND = (1.8, 2.2)


def cmd_validate(config_path, node_counts=(251, 501, 1001), compare_nodes=20001) -> int:
    node_counts = tuple(node_counts)
    if len(node_counts) < 3:
        raise ValidationError([Violation("TooFewNodeCounts", "nodes", "a convergence study needs at least 3 node counts")])
    if any(n < 11 or n % 2 == 0 for n in node_counts + (compare_nodes,)):
        raise ValidationError([Violation("GridMalformed", "nodes", "node counts must be odd and >= 11")])
    case = load_config(config_path).to_case()
    case = case.with_grid(build_uniform_grid(case.section.length, compare_nodes))

    failed = []
    for component, build in ((Component.THERMAL, analytic.thermal_profile), (Component.MECHANICAL, analytic.mechanical_profile)):
        fd = oracle.solve_fd(case, component, compare_nodes)
        errors = oracle.compare(build(case), fd)
        for name, norm in errors.items():
            ok = norm.max < MAX_REL_ERROR
            print(f"{'PASS' if ok else 'FAIL'} {component.value:<10} {name:<12} max={norm.max:.3e} rms={norm.rms:.3e}")
            if not ok:
                failed.append(f"{component.value}.{name}")
        report = oracle.convergence_study(case, component, node_counts)
        ok = ORDER_BAND[0] <= report.observed_order <= ORDER_BAND[1]
        print(f"{'PASS' if ok else 'FAIL'} {component.value:<10} order={report.observed_order:.4f} "
              f"errors={', '.join(f'{e:.3e}' for e in report.error_norms)}")
        if not ok:
            failed.append(f"{component.value}.order")
    if failed:
        print("validation failed: " + ", ".join(failed))
        return EXIT_GATE
    return EXIT_OK


def cmd_claims(output=None) -> int:
    claims = study.claims_report()
    payload = [
        {"id": c.id, "anchor": c.anchor, "description": c.description, "values": c.values,
         "passed": c.passed, "tolerance": c.tolerance}
        for c in claims
    ]
    for c in claims:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.id}")
    if output:
        _atomic_write(output, _json_text(payload))
    n_fail = sum(not c.passed for c in claims)
    print(f"{len(claims) - n_fail}/{len(claims)} claims pass")
    return EXIT_OK if n_fail == 0 else EXIT_GATE


# -- entry point -------------------------------------------------------------


def _floats(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _ints(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="energypile", description="Axial thermo-mechanical response of a single energy pile.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="profiles and summary for one config")
    s.add_argument("config")
    s.add_argument("-o", "--output", help="profile CSV (defaults to output.profile)")
    s.add_argument("--summary", help="summary JSON (defaults to <output>.summary.json)")

    s = sub.add_parser("figure", help="plot-ready series for one reference figure")
    s.add_argument("id")
    s.add_argument("-o", "--output-dir", required=True)

    s = sub.add_parser("sweep", help="summaries over one parameter")
    s.add_argument("config")
    s.add_argument("--parameter", required=True, help="head_stiffness [GPa/m] | temperature [C] | force [kN]")
    s.add_argument("--values", required=True, help="comma-separated, in the parameter's units")
    s.add_argument("-o", "--output", required=True)

    s = sub.add_parser("validate", help="closed forms against the finite-difference solver")
    s.add_argument("config")
    s.add_argument("--nodes", default="251,501,1001", help="node counts for the convergence study")
    s.add_argument("--compare-nodes", type=int, default=20001)

    s = sub.add_parser("claims", help="grade the reference-case claims")
    s.add_argument("-o", "--output")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "solve":
            return cmd_solve(args.config, args.output, args.summary)
        if args.command == "figure":
            return cmd_figure(args.id, args.output_dir)
        if args.command == "sweep":
            return cmd_sweep(args.config, args.parameter, _floats(args.values), args.output)
        if args.command == "validate":
            return cmd_validate(args.config, _ints(args.nodes), args.compare_nodes)
        return cmd_claims(args.output)
    except ValidationError as exc:
        print("invalid input:", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
