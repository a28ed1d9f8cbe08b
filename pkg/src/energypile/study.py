"""Reference pile, load scenarios, sweeps, figure datasets and claim checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from . import analytic
from .analytic import DerivedSummary, ResponseProfile
from .model import (
    DEFAULT_NODES,
    CaseDefinition,
    LoadCase,
    PileMaterial,
    RestraintSet,
    Tip,
    ValidationError,
    Violation,
    build_circular_section,
    build_uniform_grid,
    validate_case,
)

__all__ = [
    "LENGTH",
    "DIAMETER",
    "ELASTIC_MODULUS",
    "THERMAL_EXPANSION",
    "SHEAR_STIFFNESS",
    "HEAD_FORCE",
    "KH_VALUES",
    "Scenario",
    "SCENARIO_I",
    "SCENARIO_II",
    "ScenarioResult",
    "SweepSpec",
    "Series",
    "FigureDataset",
    "Claim",
    "UnknownFigureError",
    "canonical_case",
    "run_scenario",
    "sweep",
    "kh_sweep",
    "figure_dataset",
    "claims_report",
    "FIGURE_IDS",
    "NEARLY_ZERO_HEAD_FRACTION",
]

# Reference pile, SI units.
LENGTH = 26.0
DIAMETER = 1.0
ELASTIC_MODULUS = 29.2e9
THERMAL_EXPANSION = 1e-5
SHEAR_STIFFNESS = 0.0167e9
HEAD_FORCE = -1000e3
TEMPERATURE_MAGNITUDE = 10.0
KH_VALUES = (0.0, 0.125e9, 2e9)

# |u_head| <= this fraction of max |u| counts as "nearly zero".
NEARLY_ZERO_HEAD_FRACTION = 0.05

FIGURE_IDS = (2, 3, 4, 5, 6, 7)


class UnknownFigureError(KeyError):
    pass


@dataclass(frozen=True)
class Scenario:
    """Compression combined with cooling (I) or heating (II)."""

    id: str
    head_force: float
    temperature_change: float

    def __post_init__(self):
        expected = {"I": -1.0, "II": 1.0}
        if self.id not in expected:
            raise ValueError(f"scenario id must be 'I' or 'II', got {self.id!r}")
        if not self.head_force < 0:
            raise ValueError("both scenarios need a compressive head force (F < 0)")
        if not self.temperature_change * expected[self.id] > 0:
            raise ValueError(f"scenario {self.id} needs dT {'< 0' if self.id == 'I' else '> 0'}")

    @property
    def load(self) -> LoadCase:
        return LoadCase(self.head_force, self.temperature_change)


SCENARIO_I = Scenario("I", HEAD_FORCE, -TEMPERATURE_MAGNITUDE)
SCENARIO_II = Scenario("II", HEAD_FORCE, TEMPERATURE_MAGNITUDE)


class ScenarioResult(NamedTuple):
    thermal: ResponseProfile
    mechanical: ResponseProfile
    combined: ResponseProfile
    summary: DerivedSummary


def canonical_case(tip: Tip, k_h: float = 0.0, n: int = DEFAULT_NODES, load: Optional[LoadCase] = None) -> CaseDefinition:
    """The 26 m, 1 m diameter reference pile in a single clay layer."""
    case = CaseDefinition(
        section=build_circular_section(DIAMETER, LENGTH),
        material=PileMaterial(ELASTIC_MODULUS, THERMAL_EXPANSION),
        restraints=RestraintSet(SHEAR_STIFFNESS, k_h, tip),
        load=load if load is not None else LoadCase(),
        grid=build_uniform_grid(LENGTH, n),
    )
    return validate_case(case)


def run_scenario(scenario: Scenario | LoadCase, case: CaseDefinition) -> ScenarioResult:
    load = scenario.load if isinstance(scenario, Scenario) else scenario
    case = validate_case(case.with_load(load))
    th = analytic.thermal_profile(case)
    me = analytic.mechanical_profile(case)
    co = analytic.superpose(th, me)
    return ScenarioResult(th, me, co, analytic.summarize(th, me, co))


@dataclass(frozen=True)
class SweepSpec:
    base: CaseDefinition
    parameter: str
    values: tuple[float, ...]

    PARAMETERS = ("head_stiffness", "temperature", "force")

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        bad = []
        if self.parameter not in self.PARAMETERS:
            bad.append(Violation("UnknownParameter", "parameter", f"{self.parameter!r} not in {self.PARAMETERS}"))
        if not self.values:
            bad.append(Violation("EmptySweep", "values", "at least one value is required"))
        if not all(np.isfinite(self.values)):
            bad.append(Violation("NonFiniteParameter", "values", "sweep values must be finite"))
        if bad:
            raise ValidationError(bad)

    def case_for(self, value: float) -> CaseDefinition:
        b = self.base
        if self.parameter == "head_stiffness":
            return b.with_head_stiffness(value)
        if self.parameter == "temperature":
            return b.with_load(LoadCase(b.load.head_force, value))
        return b.with_load(LoadCase(value, b.load.temperature_change))


def sweep(spec: SweepSpec) -> list[DerivedSummary]:
    """One summary per swept value, in input order."""
    out = []
    for v in spec.values:
        case = spec.case_for(v)
        out.append(run_scenario(case.load, case).summary)
    return out


def kh_sweep(spec: SweepSpec) -> list[DerivedSummary]:
    if spec.parameter != "head_stiffness":
        raise ValidationError([Violation("UnknownParameter", "parameter", "kh_sweep sweeps head_stiffness only")])
    return sweep(spec)


# -- figure datasets ---------------------------------------------------------

_UNITS = {"u": "m", "eps": "1", "sigma": "Pa"}
_FIELDS = {"u": "displacement", "eps": "strain", "sigma": "stress"}
_TIP_TAG = {Tip.FULLY_FLOATING: "FF", Tip.END_BEARING: "EB"}


@dataclass(frozen=True, eq=False)
class Series:
    label: str
    quantity: str
    depth: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    unit: str


@dataclass(frozen=True, eq=False)
class FigureDataset:
    figure_id: int
    title: str
    series: tuple[Series, ...]

    def __post_init__(self):
        labels = [s.label for s in self.series]
        if len(set(labels)) != len(labels):
            raise ValueError("series labels must be unique")
        if any(s.depth.shape != s.values.shape for s in self.series):
            raise ValueError("series arrays must have matching lengths")


def _series(label: str, profile: ResponseProfile, quantity: str) -> Series:
    return Series(label, quantity, profile.depth, getattr(profile, _FIELDS[quantity]), _UNITS[quantity])


def _decomposition(fig: int, tip: Tip) -> FigureDataset:
    res = run_scenario(SCENARIO_I, canonical_case(tip))
    tag = _TIP_TAG[tip]
    series = []
    for q in ("u", "eps", "sigma"):
        for name, prof in (("thermal", res.thermal), ("mechanical", res.mechanical), ("combined", res.combined)):
            series.append(_series(f"{tag} {q} {name}", prof, q))
    return FigureDataset(fig, f"{tag} pile, scenario I (F = -1000 kN, dT = -10 C, k_h = 0): u, eps, sigma", tuple(series))


def _tip_comparison() -> FigureDataset:
    series = []
    for q in ("u", "eps", "sigma"):
        for tip in (Tip.FULLY_FLOATING, Tip.END_BEARING):
            res = run_scenario(SCENARIO_II, canonical_case(tip))
            series.append(_series(f"{_TIP_TAG[tip]} {q} combined", res.combined, q))
    return FigureDataset(4, "FF and EB piles, scenario II (F = -1000 kN, dT = +10 C, k_h = 0): combined u, eps, sigma", tuple(series))


def _head_restraint(fig: int, quantity: str) -> FigureDataset:
    series = []
    for tip in (Tip.FULLY_FLOATING, Tip.END_BEARING):
        for k_h in KH_VALUES[1:]:
            res = run_scenario(SCENARIO_II, canonical_case(tip, k_h))
            series.append(_series(f"{_TIP_TAG[tip]} {quantity} kh={k_h / 1e9:g} GPa/m", res.combined, quantity))
    return FigureDataset(fig, f"FF and EB piles, scenario II, combined {quantity} for k_h = 0.125 and 2 GPa/m", tuple(series))


def figure_dataset(figure_id: int) -> FigureDataset:
    """Plot-ready series against depth below the head (``z = L - x``)."""
    builders = {
        2: lambda: _decomposition(2, Tip.FULLY_FLOATING),
        3: lambda: _decomposition(3, Tip.END_BEARING),
        4: _tip_comparison,
        5: lambda: _head_restraint(5, "u"),
        6: lambda: _head_restraint(6, "eps"),
        7: lambda: _head_restraint(7, "sigma"),
    }
    try:
        build = builders[int(figure_id)]
    except (KeyError, ValueError, TypeError):
        raise UnknownFigureError(f"no dataset for figure {figure_id!r}; choose from {FIGURE_IDS}") from None
    return build()


# -- claims ------------------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    description: str
    values: dict
    passed: bool
    tolerance: str


def _maxabs(a) -> float:
    return float(np.max(np.abs(a)))


def claims_report() -> list[Claim]:
    """Grade every machine-checkable statement about the reference pile.

    Failures are entries with ``passed=False``, never exceptions.
    """
    FF, EB = Tip.FULLY_FLOATING, Tip.END_BEARING
    runs = {
        (sc.id, tip, k_h): run_scenario(sc, canonical_case(tip, k_h))
        for sc in (SCENARIO_I, SCENARIO_II)
        for tip in (FF, EB)
        for k_h in KH_VALUES
    }
    claims: list[Claim] = []

    def add(id, anchor, description, values, passed, tolerance="exact"):
        claims.append(Claim(id, anchor, description, values, bool(passed), tolerance))

    ref = canonical_case(EB)
    eq = analytic.equivalent_thermal_load(HEAD_FORCE, ref.section, ref.material)
    add("equivalent_dT", "load scenarios",
        "F = -1000 kN is equivalent to a temperature change of magnitude 4.36 C",
        {"abs_dT_eq_C": eq.magnitude}, abs(eq.magnitude - 4.36) <= 0.01, "+-0.01 C")
    ratio = TEMPERATURE_MAGNITUDE / eq.magnitude
    add("thermal_to_equivalent_ratio", "load scenarios",
        "|dT| = 10 C is 2.29 times the equivalent thermal load",
        {"ratio": ratio}, abs(ratio - 2.29) <= 0.01, "+-0.01")

    x0_ff = analytic.null_point(canonical_case(FF))
    add("null_point_ff_mid_length", "results, scenario I",
        "FF null point lies at mid-length when k_h = 0",
        {"x0_m": x0_ff, "L_over_2_m": LENGTH / 2}, abs(x0_ff - LENGTH / 2) <= 1e-9 * LENGTH, "1e-9 L")
    x0_eb = [analytic.null_point(canonical_case(EB, k)) for k in KH_VALUES]
    add("null_point_eb_tip", "analytical model",
        "EB null point is at the tip for every head stiffness",
        {"x0_m": x0_eb}, all(v == 0.0 for v in x0_eb))

    # scenario I, k_h = 0
    s1 = {tip: runs[("I", tip, 0.0)] for tip in (FF, EB)}
    vals, ok = {}, True
    for tip, r in s1.items():
        t = _TIP_TAG[tip]
        vals[f"{t}_max_u_thermal_m"], vals[f"{t}_max_u_mech_m"] = _maxabs(r.thermal.displacement), _maxabs(r.mechanical.displacement)
        vals[f"{t}_max_eps_thermal"], vals[f"{t}_max_eps_mech"] = _maxabs(r.thermal.strain), _maxabs(r.mechanical.strain)
        ok &= vals[f"{t}_max_u_thermal_m"] > vals[f"{t}_max_u_mech_m"] and vals[f"{t}_max_eps_thermal"] > vals[f"{t}_max_eps_mech"]
    add("s1_thermal_dominates", "results, figures 2-3",
        "scenario I: thermal displacement and strain magnitudes exceed the mechanical ones", vals, ok)

    zones = {tip: s1[tip].summary for tip in (FF, EB)}
    add("s1_tension_zone_exists", "results, figures 2-3",
        "scenario I: a tension zone develops in both piles",
        {f"{_TIP_TAG[t]}_zone_m": z.tension_zone for t, z in zones.items()},
        all(z.tension_zone is not None for z in zones.values()))
    add("s1_tension_zone_eb_longer_and_larger", "results, figures 2-3",
        "scenario I: EB tension zone is longer and its tensile stress larger than FF",
        {"EB_length_m": zones[EB].tension_zone_length, "FF_length_m": zones[FF].tension_zone_length,
         "EB_max_tension_Pa": zones[EB].max_tensile_stress, "FF_max_tension_Pa": zones[FF].max_tensile_stress},
        zones[EB].tension_zone_length > zones[FF].tension_zone_length
        and zones[EB].max_tensile_stress > zones[FF].max_tensile_stress)

    u = {t: s1[t].combined.displacement for t in (FF, EB)}
    add("s1_head_eb_tip_ff_displacement", "results, figures 2-3",
        "scenario I: |u_head| is larger for EB, |u_tip| is larger for FF",
        {"EB_u_head_m": u[EB][-1], "FF_u_head_m": u[FF][-1], "EB_u_tip_m": u[EB][0], "FF_u_tip_m": u[FF][0]},
        abs(u[EB][-1]) > abs(u[FF][-1]) and abs(u[FF][0]) > abs(u[EB][0]))

    e_ff, e_eb = np.abs(s1[FF].combined.strain), np.abs(s1[EB].combined.strain)
    # with k_h = 0 both heads carry F/(A E) + alpha dT, so the strains coincide there
    head_gap = abs(e_ff[-1] - e_eb[-1])
    add("s1_strain_ff_exceeds_eb_everywhere", "results, figures 2-3",
        "scenario I: |combined strain| is larger in FF than in EB below the head and equal at the head",
        {"min_margin_below_head": float(np.min(e_ff[:-1] - e_eb[:-1])), "head_gap": float(head_gap)},
        np.all(e_ff[:-1] > e_eb[:-1]) and head_gap <= 1e-12 * e_eb[-1], "strict below head, 1e-12 relative at head")

    r = s1[FF]
    sig_scale = _maxabs(r.combined.stress)
    free_share = THERMAL_EXPANSION * r.combined.load.temperature_change
    add("s1_ff_tip_stress_and_strain", "results, figures 2-3",
        "FF tip: combined stress and strain beyond free expansion vanish",
        {"sigma_tip_Pa": float(r.combined.stress[0]), "eps_tip_minus_free": float(r.combined.strain[0] - free_share),
         "eps_tip_total": float(r.combined.strain[0])},
        abs(r.combined.stress[0]) <= 1e-10 * sig_scale
        and abs(r.combined.strain[0] - free_share) <= 1e-10 * _maxabs(r.combined.strain), "1e-10 relative")

    head_th = {t: float(s1[t].thermal.stress[-1]) for t in (FF, EB)}
    add("s1_thermal_head_stress_zero_without_restraint", "results, figures 2-3",
        "with k_h = 0 the thermal stress at the head is zero",
        {f"{_TIP_TAG[t]}_sigma_head_Pa": v for t, v in head_th.items()},
        all(abs(v) <= 1e-10 * ELASTIC_MODULUS * THERMAL_EXPANSION * TEMPERATURE_MAGNITUDE for v in head_th.values()),
        "1e-10 of E alpha |dT|")

    # scenario II
    max_sigma = {k: float(r.combined.stress.max()) for k, r in runs.items() if k[0] == "II"}
    add("s2_no_tension", "load scenarios",
        "scenario II: combined stress is compressive along the entire pile for every tip and k_h",
        {"max_sigma_Pa": max(max_sigma.values())}, all(v <= 0.0 for v in max_sigma.values()))

    s2 = {tip: runs[("II", tip, 0.0)] for tip in (FF, EB)}
    uff = s2[FF].combined.displacement
    add("s2_ff_head_nearly_zero", "results, figure 4",
        f"scenario II: FF head displacement is nearly zero (|u_head| <= {NEARLY_ZERO_HEAD_FRACTION:.0%} of max |u|)",
        {"u_head_m": float(uff[-1]), "max_abs_u_m": _maxabs(uff), "fraction": abs(uff[-1]) / _maxabs(uff)},
        abs(uff[-1]) <= NEARLY_ZERO_HEAD_FRACTION * _maxabs(uff), f"{NEARLY_ZERO_HEAD_FRACTION:.0%} of max |u|")
    add("s2_ff_tip_exceeds_head", "results, figure 4",
        "scenario II: FF |u_tip| exceeds |u_head|",
        {"u_tip_m": float(uff[0]), "u_head_m": float(uff[-1])}, abs(uff[0]) > abs(uff[-1]))
    u1_head = float(s1[FF].combined.displacement[-1])
    add("s2_ff_tip_below_s1_head", "results, figure 4",
        "FF: |u_tip| in scenario II is smaller than |u_head| in scenario I",
        {"s2_u_tip_m": float(uff[0]), "s1_u_head_m": u1_head}, abs(uff[0]) < abs(u1_head))
    add("s2_ff_displacement_smaller_than_s1", "results, figure 4",
        "FF: max |combined u| is smaller in scenario II than in scenario I",
        {"s2_max_u_m": _maxabs(uff), "s1_max_u_m": _maxabs(s1[FF].combined.displacement)},
        _maxabs(uff) < _maxabs(s1[FF].combined.displacement))

    m = {(sc, t): (_maxabs(runs[(sc, t, 0.0)].combined.strain), _maxabs(runs[(sc, t, 0.0)].combined.stress))
         for sc in ("I", "II") for t in (FF, EB)}
    add("s2_strain_smaller_than_s1", "results, figure 4",
        "max |combined strain| is smaller in scenario II than scenario I, for both tips",
        {f"{sc}_{_TIP_TAG[t]}_max_eps": v[0] for (sc, t), v in m.items()},
        all(m[("II", t)][0] < m[("I", t)][0] for t in (FF, EB)))
    add("s2_strain_ff_exceeds_eb", "results, figure 4",
        "scenario II: max |combined strain| is larger in FF than EB",
        {"FF_max_eps": m[("II", FF)][0], "EB_max_eps": m[("II", EB)][0]}, m[("II", FF)][0] > m[("II", EB)][0])
    add("s2_stress_larger_than_s1", "results, figure 4",
        "max |combined stress| is larger in scenario II than scenario I, for both tips",
        {f"{sc}_{_TIP_TAG[t]}_max_sigma_Pa": v[1] for (sc, t), v in m.items()},
        all(m[("II", t)][1] > m[("I", t)][1] for t in (FF, EB)))
    add("s2_stress_eb_exceeds_ff", "results, figure 4",
        "scenario II: max |combined stress| is larger in EB than FF",
        {"EB_max_sigma_Pa": m[("II", EB)][1], "FF_max_sigma_Pa": m[("II", FF)][1]}, m[("II", EB)][1] > m[("II", FF)][1])

    # head restraint, scenario II
    head = {(t, k): runs[("II", t, k)].summary.head_displacement for t in (FF, EB) for k in KH_VALUES}
    ratio = head[(EB, 0.0)] / head[(EB, 0.125e9)]
    add("fig5_eb_head_reduction_over_8", "results, figure 5",
        "EB, scenario II: head displacement at k_h = 0 is more than 8 times that at k_h = 0.125 GPa/m",
        {"u_head_kh0_m": head[(EB, 0.0)], "u_head_kh0.125_m": head[(EB, 0.125e9)], "ratio": ratio}, ratio > 8.0, "> 8")
    add("fig5_eb_head_negative_kh2", "results, figure 5",
        "EB, scenario II: head displacement is negative at k_h = 2 GPa/m",
        {"u_head_kh2_m": head[(EB, 2e9)]}, head[(EB, 2e9)] < 0.0, "< 0")
    add("fig5_ff_head_below_eb", "results, figure 5",
        "scenario II with a head spring: FF head sits lower than EB head",
        {f"{_TIP_TAG[t]}_u_head_kh{k / 1e9:g}_m": head[(t, k)] for t in (FF, EB) for k in KH_VALUES[1:]},
        all(head[(FF, k)] < head[(EB, k)] for k in KH_VALUES[1:]))
    add("kh_head_displacement_decreasing", "results, figure 5",
        "scenario II: head displacement decreases as k_h increases, for both tips",
        {f"{_TIP_TAG[t]}_u_head_m": [head[(t, k)] for k in KH_VALUES] for t in (FF, EB)},
        all(np.all(np.diff([head[(t, k)] for k in KH_VALUES]) < 0) for t in (FF, EB)))

    eps_head = {(t, k): float(runs[("II", t, k)].combined.strain[-1]) for t in (FF, EB) for k in KH_VALUES}
    add("fig6_head_strain_turns_compressive", "results, figure 6",
        "scenario II: head strain is tensile without a head spring and compressive with k_h = 2 GPa/m, for both tips",
        {f"{_TIP_TAG[t]}_eps_head_kh{k / 1e9:g}": eps_head[(t, k)] for t in (FF, EB) for k in (0.0, 2e9)},
        all(eps_head[(t, 0.0)] > 0 > eps_head[(t, 2e9)] for t in (FF, EB)))
    eb_eps_max = {k: float(runs[("II", EB, k)].combined.strain.max()) for k in KH_VALUES[1:]}
    add("fig6_eb_strain_compressive", "results, figure 6",
        "scenario II with a head spring: EB strain is compressive along the entire pile",
        {f"max_eps_kh{k / 1e9:g}": v for k, v in eb_eps_max.items()}, all(v < 0 for v in eb_eps_max.values()))
    ff_tip_eps = {k: float(runs[("II", FF, k)].combined.strain[0]) for k in KH_VALUES[1:]}
    add("fig6_ff_bottom_expands", "results, figure 6",
        "scenario II with a head spring: FF strain is tensile near the tip",
        {f"eps_tip_kh{k / 1e9:g}": v for k, v in ff_tip_eps.items()}, all(v > 0 for v in ff_tip_eps.values()))
    d_eps = {t: _maxabs(runs[("II", t, 2e9)].combined.strain - runs[("II", t, 0.0)].combined.strain) for t in (FF, EB)}
    add("fig6_eb_strain_more_affected", "results, figure 6",
        "the head spring changes strain more in EB than FF",
        {f"{_TIP_TAG[t]}_max_delta_eps": v for t, v in d_eps.items()}, d_eps[EB] > d_eps[FF])

    sig = {(t, k): runs[("II", t, k)].combined.stress for t in (FF, EB) for k in KH_VALUES}
    tol = 1e-9 * ELASTIC_MODULUS * THERMAL_EXPANSION * TEMPERATURE_MAGNITUDE
    mono = all(np.all(sig[(t, b)] <= sig[(t, a)] + tol) for t in (FF, EB) for a, b in zip(KH_VALUES, KH_VALUES[1:]))
    add("fig7_stress_more_compressive_with_kh", "results, figure 7",
        "scenario II: combined stress becomes more compressive at every node as k_h increases",
        {f"{_TIP_TAG[t]}_max_abs_sigma_Pa": [_maxabs(sig[(t, k)]) for k in KH_VALUES] for t in (FF, EB)},
        mono, "node-wise, 1e-9 E alpha |dT| slack")
    add("fig7_eb_stress_exceeds_ff", "results, figure 7",
        "scenario II: max |stress| is larger in EB than FF for each head spring",
        {f"{_TIP_TAG[t]}_kh{k / 1e9:g}_Pa": _maxabs(sig[(t, k)]) for t in (FF, EB) for k in KH_VALUES[1:]},
        all(_maxabs(sig[(EB, k)]) > _maxabs(sig[(FF, k)]) for k in KH_VALUES[1:]))
    d_ff = sig[(FF, 2e9)] - sig[(FF, 0.0)]
    d_eb = sig[(EB, 2e9)] - sig[(EB, 0.0)]
    add("fig7_ff_restraint_stress_vanishes_at_tip", "results, figure 7",
        "FF: stress induced by the head spring shrinks with depth and vanishes at the tip",
        {"delta_sigma_head_Pa": float(d_ff[-1]), "delta_sigma_tip_Pa": float(d_ff[0])},
        abs(d_ff[0]) <= 1e-9 * _maxabs(d_ff) and np.all(np.diff(np.abs(d_ff)) >= -tol), "1e-9 relative at tip")
    add("fig7_eb_restraint_stress_throughout", "results, figure 7",
        "EB: the head spring adds compression over the whole length, tip included",
        {"delta_sigma_head_Pa": float(d_eb[-1]), "delta_sigma_tip_Pa": float(d_eb[0])}, np.all(d_eb < 0))
    return claims
