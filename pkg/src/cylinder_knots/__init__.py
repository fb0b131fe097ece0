"""
Cylinder knots: closed curves on a cylinder built from regular star polygons,
their braid words, and the classical invariants used to test which knots
can occur among them.
"""

from .braid import BraidWord, canonicalize, enumerate_candidates, extract_braid, parse_braid
from .errors import CylinderKnotError
from .geometry import CurveParams, chord_crossings, generic_phase
from .invariants import InvariantSet, alexander, invariant_set, jones, seifert_matrix, signature
from .laurent import LaurentPoly

__all__ = [
    "BraidWord",
    "CurveParams",
    "CylinderKnotError",
    "InvariantSet",
    "LaurentPoly",
    "alexander",
    "canonicalize",
    "chord_crossings",
    "enumerate_candidates",
    "extract_braid",
    "generic_phase",
    "invariant_set",
    "jones",
    "parse_braid",
    "seifert_matrix",
    "signature",
]

__version__ = "0.1.0"
