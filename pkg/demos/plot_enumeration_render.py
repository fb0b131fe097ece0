"""
Counting braids and drawing diagrams
====================================
"""

# %%
# Candidates per (s, n)
# ---------------------
#
# The candidate list stays below (n+1) 2^(s-3).

from cylinder_knots import enumerate_candidates
from cylinder_knots.braid import theorem_bound

for s, n in [(3, 7), (3, 11), (4, 9)]:
    print(s, n, len(enumerate_candidates(s, n)), "<=", theorem_bound(s, n))

# %%
# An SVG diagram
# --------------

from pathlib import Path
from tempfile import gettempdir

from cylinder_knots import CurveParams
from cylinder_knots.render import render_svg

svg = render_svg(CurveParams.generic(3, 11, 4))
out = Path(gettempdir()) / "z_3_11_4.svg"
out.write_text(svg)
print(out, len(svg), "bytes")
