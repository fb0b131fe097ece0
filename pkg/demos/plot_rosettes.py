"""
Rosettes and table lookup
=========================

The rosette braid alternates signs across generators. Some of its
closures are cylinder knots, which the invariants confirm.
"""

# %%
from cylinder_knots.rosette import RosetteParams, rosette_as_cylinder, rosette_braid, verify_rosette

print(rosette_braid(RosetteParams(3, 4)))
res = verify_rosette(3, 4)
print(res["cylinder_params"], res["pass"])

# %%
# Naming the knots
# ----------------

from cylinder_knots import extract_braid, invariant_set
from cylinder_knots.knot_table import identify, load_table

rows = load_table()
for s, k in [(3, 2), (3, 4), (3, 5), (4, 3)]:
    inv = invariant_set(extract_braid(rosette_as_cylinder(s, k)))
    print(f"R^{k}_{s}", [c["name"] for c in identify(inv, rows)])
