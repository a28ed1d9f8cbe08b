"""Grade the qualitative statements about the reference pile.

Each claim is recomputed from the closed forms and printed with the
numbers behind its verdict.
"""

# %%
from energypile import study


def fmt(v):
    if isinstance(v, float):
        return f"{v:.4g}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(fmt(x) for x in v) + "]"
    return str(v)


report = study.claims_report()
for claim in report:
    mark = "ok  " if claim.passed else "FAIL"
    values = ", ".join(f"{k}={fmt(v)}" for k, v in claim.values.items())
    print(f"[{mark}] {claim.id}: {values}")

print(f"\n{sum(c.passed for c in report)}/{len(report)} claims hold")
