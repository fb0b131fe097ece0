"""
Symmetry and ribbon conditions
==============================

A cylinder knot with gcd(n, m) = d > 1 has cyclic period d, and its factor
knot must be ribbon. We test the numeric shadows of ribbonness.
"""

# %%
# One report
# ----------

from cylinder_knots import CurveParams
from cylinder_knots.conditions import check_necessary, max_billiard_period

p = CurveParams.generic(3, 14, 8)
print("maximal billiard period", max_billiard_period(14, 8))
report = check_necessary(p)
print(report.verdict)
for line in report.reasons:
    print(" -", line)

# %%
# A small sweep
# -------------
#
# Every case passes; a failure would point at a bug.

import math

fails = 0
total = 0
for n in range(7, 14):
    if math.gcd(n, 3) == 1:
        for m in range(1, 13):
            total += 1
            fails += not check_necessary(CurveParams.generic(3, n, m), fox_milnor=False).passed
print(total, "cases,", fails, "failures")

# %%
# Knots that are never cylinder knots
# -----------------------------------

from cylinder_knots.conditions import exclusion_check, load_dossiers

for name, dossier in load_dossiers().items():
    res = exclusion_check(dossier)
    print(name, res["cylinder_possible"], res["reasons"])
