"""How a stiffer head restraint changes the heated pile.

Sweeps k_h for both tip conditions under scenario II and prints the
head displacement, head stress and null point.  The head spring acts on
the thermal part of the response; the head force stays prescribed.
"""

# %%
import numpy as np

from energypile import study
from energypile.model import Tip

values = np.array([0.0, 0.05, 0.125, 0.5, 1.0, 2.0]) * 1e9

for tip in (Tip.END_BEARING, Tip.FULLY_FLOATING):
    base = study.canonical_case(tip, load=study.SCENARIO_II.load)
    rows = study.kh_sweep(study.SweepSpec(base, "head_stiffness", tuple(values)))
    print(f"\n{tip.value}")
    print(f"{'kh [GPa/m]':>11} {'u_head [mm]':>12} {'sigma_head [MPa]':>17} {'x0 [m]':>8}")
    for k, s in zip(values, rows):
        print(f"{k / 1e9:11.3f} {s.head_displacement * 1e3:12.4f} {s.head_stress / 1e6:17.4f} {s.null_point:8.3f}")

# %% The head displacement falls as k_h grows, but for the end-bearing pile
# it does not reach zero within this range: the mechanical settlement is
# not resisted by the head spring.
