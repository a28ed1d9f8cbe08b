"""Reference pile under both load scenarios.

Walks through the 26 m, 1 m diameter pile: builds the case, splits the
response into thermal and mechanical parts, and prints the summary
quantities.  If matplotlib is installed the combined stress profiles
are plotted against depth.
"""

# %% Build the reference case
import numpy as np

from energypile import analytic, study
from energypile.model import Tip

case = study.canonical_case(Tip.END_BEARING)
psi = analytic.compute_psi(case.section, case.material, case.restraints)
print(f"psi = {psi:.5f} 1/m, psi L = {psi * case.section.length:.4f}")

eq = analytic.equivalent_thermal_load(study.HEAD_FORCE, case.section, case.material)
print(f"equivalent thermal load of a 1000 kN head force: {eq.magnitude:.3f} C")

# %% Scenario I (compression and cooling) and scenario II (compression and heating)
results = {}
for scenario in (study.SCENARIO_I, study.SCENARIO_II):
    for tip in (Tip.END_BEARING, Tip.FULLY_FLOATING):
        res = study.run_scenario(scenario, study.canonical_case(tip))
        results[scenario.id, tip] = res
        s = res.summary
        zone = "none" if s.tension_zone is None else f"{s.tension_zone_length:.2f} m"
        print(
            f"scenario {scenario.id:>2} {tip.value:<15} "
            f"u_head={s.head_displacement * 1e3:+.3f} mm  "
            f"sigma_head={s.head_stress / 1e6:+.3f} MPa  tension zone={zone}"
        )

# %% Thermal and mechanical parts add up to the combined response
res = results["I", Tip.END_BEARING]
assert np.allclose(res.combined.stress, res.thermal.stress + res.mechanical.stress)

# %% Plot (optional)
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 2, sharey=True, figsize=(8, 5))
    for ax, sid in zip(axes, ("I", "II")):
        for tip in (Tip.END_BEARING, Tip.FULLY_FLOATING):
            prof = results[sid, tip].combined
            ax.plot(prof.stress / 1e6, prof.depth, label=tip.value)
        ax.set_title(f"scenario {sid}")
        ax.set_xlabel("stress [MPa]")
        ax.legend()
    axes[0].set_ylabel("depth [m]")
    axes[0].invert_yaxis()
    plt.show()
