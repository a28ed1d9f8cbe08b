"""Closed forms against the finite-difference solver.

Solves every tip/component/k_h combination on a sequence of grids,
prints the error and observed order, then the per-field comparison on
a fine grid.
"""

# %%
from energypile import analytic, oracle, study
from energypile.analytic import Component
from energypile.model import Tip

counts = (251, 501, 1001, 2001)
for tip in (Tip.END_BEARING, Tip.FULLY_FLOATING):
    for component in (Component.THERMAL, Component.MECHANICAL):
        for k in study.KH_VALUES:
            case = study.canonical_case(tip, k, load=study.SCENARIO_II.load)
            rep = oracle.convergence_study(case, component, counts)
            errs = " ".join(f"{e:.2e}" for e in rep.error_norms)
            print(f"{tip.value:<15} {component.value:<10} kh={k / 1e9:<5g} errors {errs}  order {rep.observed_order:.3f}")

# %% Field-by-field comparison on a refining grid
case = study.canonical_case(Tip.FULLY_FLOATING, 0.125e9, n=1001, load=study.SCENARIO_II.load)
fd = oracle.solve_fd(case, Component.THERMAL, 20001)
for name, norm in oracle.compare(analytic.thermal_profile(case), fd).items():
    print(f"{name:<13} max {norm.max:.2e}  rms {norm.rms:.2e}")
print(f"equilibrium residual {oracle.equilibrium_residual(fd):.2e}")
