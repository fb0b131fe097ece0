"""
Torus knots as cylinder knots
=============================

A billiard curve in a cylinder with n reflections, rotation number s and
m = n maxima closes up into the torus knot T(s, n). This walk-through reads
the braid off the diagram and checks it against the standard word.
"""

# %%
# Build the curve
# ---------------
#
# ``CurveParams.generic`` picks a phase away from every degenerate value.

from cylinder_knots import CurveParams, canonicalize, extract_braid, generic_phase
from cylinder_knots.braid import torus_braid

p = CurveParams.generic(3, 7, 7)
print(p, "phase", generic_phase(3, 7, 7))

# %%
# Read the braid
# --------------
#
# Every block of the word reads odd generators first.

w = extract_braid(p)
print(w)
print("canonical form equals (s1 s2)^7:", canonicalize(w) == torus_braid(3, 7))

# %%
# Invariants
# ----------

from cylinder_knots import invariant_set

inv = invariant_set(w)
print("Alexander:", inv.alexander)
print("det", inv.det, "signature", inv.signature, "Arf", inv.arf)
print("Jones (powers of t^1/2):", inv.jones)

# %%
# The phase does not matter
# -------------------------
#
# Away from the degenerate phases only the mirror image can change.

from fractions import Fraction

for phi in (Fraction(1, 101), Fraction(22, 101), Fraction(50, 101)):
    other = invariant_set(extract_braid(CurveParams(3, 7, 7, phi)))
    print(phi, other.agrees_up_to_mirror(inv))
