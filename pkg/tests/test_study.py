import numpy as np
import pytest

from energypile import study
from energypile.model import Tip, ValidationError

EB, FF = Tip.END_BEARING, Tip.FULLY_FLOATING


def test_canonical_case():
    c = study.canonical_case(EB)
    assert c.section.length == 26.0 and c.grid.node_count == 1001
    assert c.material.elastic_modulus == 29.2e9
    study.canonical_case(FF, 2e9)
    with pytest.raises(ValidationError):
        study.canonical_case(EB, -1.0)


def test_scenario_sign_rules():
    assert study.SCENARIO_I.head_force < 0 and study.SCENARIO_I.temperature_change < 0
    assert study.SCENARIO_II.temperature_change > 0
    with pytest.raises(ValueError):
        study.Scenario("I", -1e6, 10.0)
    with pytest.raises(ValueError):
        study.Scenario("II", 1e6, 10.0)


def test_scenario_i_eb_has_tension_zone():
    assert study.run_scenario(study.SCENARIO_I, study.canonical_case(EB)).summary.tension_zone is not None


@pytest.mark.parametrize("tip", [EB, FF])
def test_scenario_ii_no_tension(tip):
    res = study.run_scenario(study.SCENARIO_II, study.canonical_case(tip))
    assert res.combined.stress.max() <= 0.0


def test_ff_tip_stress_nearly_zero():
    res = study.run_scenario(study.SCENARIO_I, study.canonical_case(FF))
    assert abs(res.combined.stress[0]) <= 1e-10 * np.max(np.abs(res.combined.stress))


def test_kh_sweep_eb_scenario_ii_decreasing():
    base = study.canonical_case(EB, load=study.SCENARIO_II.load)
    out = study.kh_sweep(study.SweepSpec(base, "head_stiffness", study.KH_VALUES))
    heads = [s.head_displacement for s in out]
    assert heads[0] > heads[1] > heads[2]


def test_single_value_sweep_matches_run_scenario():
    base = study.canonical_case(FF, load=study.SCENARIO_II.load)
    [s] = study.kh_sweep(study.SweepSpec(base, "head_stiffness", [0.0]))
    assert s == study.run_scenario(study.SCENARIO_II, base).summary


def test_sweep_other_parameters():
    base = study.canonical_case(EB, load=study.SCENARIO_II.load)
    temps = study.sweep(study.SweepSpec(base, "temperature", [-10.0, 10.0]))
    assert temps[0].tension_zone is not None and temps[1].tension_zone is None
    forces = study.sweep(study.SweepSpec(base, "force", [0.0, -2000e3]))
    assert forces[1].head_stress == pytest.approx(-2000e3 / base.section.area, rel=1e-12)
    with pytest.raises(ValidationError):
        study.kh_sweep(study.SweepSpec(base, "force", [1.0]))


@pytest.mark.parametrize("param,values", [("head_stiffness", []), ("friction", [1.0]), ("force", [float("nan")])])
def test_bad_sweeps(param, values):
    with pytest.raises(ValidationError):
        study.SweepSpec(study.canonical_case(EB), param, values)


@pytest.mark.parametrize("fig,count", [(2, 9), (3, 9), (4, 6), (5, 4), (6, 4), (7, 4)])
def test_figure_series_counts(fig, count):
    data = study.figure_dataset(fig)
    assert data.figure_id == fig and len(data.series) == count
    for s in data.series:
        assert s.depth[0] == 26.0 and s.depth[-1] == 0.0
        assert s.values.shape == s.depth.shape


def test_figure_5_labels():
    labels = [s.label for s in study.figure_dataset(5).series]
    assert labels == ["FF u kh=0.125 GPa/m", "FF u kh=2 GPa/m", "EB u kh=0.125 GPa/m", "EB u kh=2 GPa/m"]


def test_figure_2_uses_scenario_i_loads():
    data = study.figure_dataset(2)
    th = next(s for s in data.series if s.label == "FF sigma thermal")
    # cooling: the restrained pile is in tension
    assert th.values.max() > 0


@pytest.mark.parametrize("fig", [1, 8, "x"])
def test_unknown_figure(fig):
    with pytest.raises(study.UnknownFigureError):
        study.figure_dataset(fig)


def test_figure_dataset_deterministic():
    a, b = study.figure_dataset(7), study.figure_dataset(7)
    assert all(x.values.tobytes() == y.values.tobytes() for x, y in zip(a.series, b.series))


def test_claims_report_structure():
    claims = study.claims_report()
    ids = [c.id for c in claims]
    assert len(ids) == len(set(ids))
    assert {"equivalent_dT", "thermal_to_equivalent_ratio", "fig5_eb_head_reduction_over_8",
            "fig5_eb_head_negative_kh2", "s1_tension_zone_eb_longer_and_larger"} <= set(ids)
    for c in claims:
        assert c.anchor and c.description and c.values and c.tolerance


def test_claims_fig5_values_are_reported():
    c = {c.id: c for c in study.claims_report()}["fig5_eb_head_reduction_over_8"]
    assert c.values["ratio"] == pytest.approx(c.values["u_head_kh0_m"] / c.values["u_head_kh0.125_m"])
