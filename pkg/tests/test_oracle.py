import numpy as np
import pytest

from energypile import analytic, oracle, study
from energypile.analytic import Component
from energypile.model import CaseMismatchError, LoadCase, Tip

EB, FF = Tip.END_BEARING, Tip.FULLY_FLOATING


@pytest.mark.parametrize("component", [Component.THERMAL, Component.MECHANICAL])
def test_fd_matches_closed_form(tip, k_h, component):
    case = study.canonical_case(tip, k_h, n=2001, load=study.SCENARIO_I.load)
    fd = oracle.solve_fd(case, component, 2001)
    ref = analytic.thermal_profile(case) if component is Component.THERMAL else analytic.mechanical_profile(case)
    errors = oracle.compare(ref, fd)
    assert set(errors) == {"displacement", "strain", "stress", "shear"}
    assert max(e.max for e in errors.values()) < 1e-5
    assert all(e.rms <= e.max for e in errors.values())


def test_eb_thermal_reference_at_20001_nodes():
    case = study.canonical_case(EB, load=study.SCENARIO_I.load)
    fd = oracle.solve_fd(case, Component.THERMAL, 20001)
    x = fd.grid.x
    psi = analytic.compute_psi(case.section, case.material, case.restraints)
    exact = 1e-5 * -10 * np.sinh(psi * x) / (psi * np.cosh(psi * 26.0))
    assert np.max(np.abs(fd.displacement - exact)) / np.max(np.abs(exact)) < 1e-5


def test_homogeneous_problem_is_zero():
    case = study.canonical_case(EB, load=LoadCase(0.0, 0.0))
    for comp in (Component.THERMAL, Component.MECHANICAL):
        assert not oracle.solve_fd(case, comp, 101).displacement.any()


def test_ff_mechanical_global_equilibrium():
    case = study.canonical_case(FF, load=LoadCase(-1000e3, 0.0))
    fd = oracle.solve_fd(case, Component.MECHANICAL, 1001)
    p, ks = case.section.perimeter, case.restraints.shear_stiffness
    reaction = p * ks * np.trapezoid(fd.displacement, fd.grid.x)
    assert reaction == pytest.approx(-1000e3, rel=1e-5)


@pytest.mark.parametrize("component", [Component.THERMAL, Component.MECHANICAL])
def test_discrete_equilibrium_is_second_order(tip, k_h, component):
    case = study.canonical_case(tip, k_h, load=study.SCENARIO_II.load)
    r = [oracle.equilibrium_residual(oracle.solve_fd(case, component, n)) for n in (251, 501)]
    assert r[1] < 1e-5
    # with two derivative ends the ghost-node scheme balances exactly, leaving round-off only
    if r[1] > 1e-9:
        assert np.log2(r[0] / r[1]) == pytest.approx(2.0, abs=0.3)


def test_convergence_study_order():
    case = study.canonical_case(EB, load=study.SCENARIO_I.load)
    rep = oracle.convergence_study(case, Component.THERMAL, [251, 501, 1001])
    assert rep.observed_order == pytest.approx(2.0, abs=0.2)
    assert rep.error_norms[-1] < rep.error_norms[0]
    assert len(rep.pairwise_orders) == 2


def test_convergence_study_needs_three_grids():
    case = study.canonical_case(EB, load=study.SCENARIO_I.load)
    with pytest.raises(ValueError):
        oracle.convergence_study(case, Component.THERMAL, [251, 501])


@pytest.mark.parametrize("n", [10, 12, 100])
def test_node_count_precondition(n):
    with pytest.raises(ValueError):
        oracle.solve_fd(study.canonical_case(EB), Component.THERMAL, n)


def test_combined_is_not_a_solver_component():
    with pytest.raises(ValueError):
        oracle.solve_fd(study.canonical_case(EB), Component.COMBINED, 101)


def test_compare_self_is_zero():
    case = study.canonical_case(FF, 2e9, n=101, load=study.SCENARIO_II.load)
    ref = analytic.thermal_profile(case)
    as_fd = oracle.FdSolution(ref.grid, ref.displacement, ref.strain, ref.stress, ref.shear, Component.THERMAL, case)
    assert all(e.max == 0.0 and e.rms == 0.0 for e in oracle.compare(ref, as_fd).values())


def test_compare_on_shared_nodes_of_finer_grid():
    case = study.canonical_case(EB, 0.125e9, n=101, load=study.SCENARIO_II.load)
    errors = oracle.compare(analytic.thermal_profile(case), oracle.solve_fd(case, Component.THERMAL, 1001))
    assert errors["displacement"].max < 1e-5


def test_compare_rejects_mismatch():
    case = study.canonical_case(EB, 0.0, n=101, load=study.SCENARIO_II.load)
    fd = oracle.solve_fd(case.with_head_stiffness(2e9), Component.THERMAL, 101)
    with pytest.raises(CaseMismatchError):
        oracle.compare(analytic.thermal_profile(case), fd)
    with pytest.raises(CaseMismatchError):
        oracle.compare(analytic.mechanical_profile(case), oracle.solve_fd(case, Component.THERMAL, 101))
    with pytest.raises(CaseMismatchError):
        oracle.compare(analytic.thermal_profile(case), oracle.solve_fd(case, Component.THERMAL, 51))


def test_solver_is_bit_stable():
    case = study.canonical_case(FF, 0.125e9, load=study.SCENARIO_I.load)
    a = oracle.solve_fd(case, Component.THERMAL, 1001).displacement
    b = oracle.solve_fd(case, Component.THERMAL, 1001).displacement
    assert a.tobytes() == b.tobytes()
