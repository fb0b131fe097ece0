"""
Rosette knots: closures of (s1 s2^-1 s3 s4^-1 ...)^k on s strands.

For k >= 2 and gcd(k, s) = 1 the rosette knot R^k_s is realised by the
cylinder knot Z(s, k(s+1), k). verify_rosette checks this by comparing
invariants of both sides; equality of knots is only certified up to the
invariant set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braid import BraidWord, extract_braid
from .errors import ParameterError
from .geometry import CurveParams
from .invariants import JONES_CAP, burau_charpoly, invariant_set


@dataclass(frozen=True)
class RosetteParams:
    s: int
    k: int
    eps: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.s < 2 or self.k < 1:
            raise ParameterError(f"rosette needs s >= 2 and k >= 1, got s={self.s}, k={self.k}")
        if self.eps is not None:
            eps = tuple(int(e) for e in self.eps)
            if len(eps) != self.s - 1 or any(e not in (1, -1) for e in eps):
                raise ParameterError(f"eps must be {self.s - 1} signs in {{+1, -1}}")
            object.__setattr__(self, "eps", eps)

    @property
    def signs(self) -> tuple[int, ...]:
        if self.eps is not None:
            return self.eps
        return tuple(1 if j % 2 else -1 for j in range(1, self.s))

    @property
    def is_knot(self) -> bool:
        return math.gcd(self.s, self.k) == 1


def rosette_braid(p: RosetteParams) -> BraidWord:
    block = tuple((j, e) for j, e in zip(range(1, p.s), p.signs))
    return BraidWord(p.s, block * p.k)


def rosette_as_cylinder(s: int, k: int) -> CurveParams:
    """Z(s, k(s+1), k) at a generic phase."""
    if k < 2:
        raise ParameterError(f"realisation needs k >= 2, got {k}")
    if math.gcd(s, k) != 1:
        raise ParameterError(f"R^{k}_{s} is a link with {math.gcd(s, k)} components; only knots are realised")
    return CurveParams.generic(s, k * (s + 1), k)


def verify_rosette(s: int, k: int, cap: int = JONES_CAP) -> dict:
    params = rosette_as_cylinder(s, k)
    lhs = invariant_set(rosette_braid(RosetteParams(s, k)), cap)
    rhs = invariant_set(extract_braid(params), cap)
    return {
        "s": s,
        "k": k,
        "cylinder_params": {"s": params.s, "n": params.n, "m": params.m, "phi": str(params.phi)},
        "invariants_lhs": lhs.to_json(),
        "invariants_rhs": rhs.to_json(),
        "pass": lhs.agrees_up_to_mirror(rhs),
    }


# --- the factor-block identity ------------------------------------------


def _layer(s: int, gens, e: int) -> tuple[tuple[int, int], ...]:
    return tuple((j, e) for j in gens)


def factor_braid_long(s: int) -> BraidWord:
    """The factor braid read off the layered slice (odd and even s forms)."""
    odd = list(range(1, s, 2))
    even = list(range(2, s, 2))
    if s % 2:
        h = (s + 1) // 2
        letters = _layer(s, odd + even, 1) * h + _layer(s, odd + even, -1) * h
    else:
        h = s // 2
        letters = (
            _layer(s, odd + even, 1) * h
            + _layer(s, odd, 1)
            + _layer(s, even, -1)
            + _layer(s, odd + even, -1) * h
        )
    return BraidWord(s, letters)


def factor_braid_reduced(s: int) -> BraidWord:
    """s1 s3 s5 ... s2^-1 s4^-1 ...: odd generators positive, even negative."""
    return BraidWord(s, _layer(s, range(1, s, 2), 1) + _layer(s, range(2, s, 2), -1))


def factor_block_identity_check(s: int) -> dict:
    """
    Compare the long factor braid with the reduced block. Invariants of the
    closures must agree; equal Burau characteristic polynomials would be
    evidence of conjugacy, and their disagreement is reported, not hidden.
    """
    if not 2 <= s <= 9:
        raise ParameterError(f"s must lie in 2..9, got {s}")
    long_word = factor_braid_long(s)
    short_word = factor_braid_reduced(s)
    a = invariant_set(long_word)
    b = invariant_set(short_word)
    cp_long = burau_charpoly(long_word)
    cp_short = burau_charpoly(short_word)
    return {
        "s": s,
        "long": str(long_word),
        "reduced": str(short_word),
        "invariants_long": a.to_json(),
        "invariants_reduced": b.to_json(),
        "invariants_agree": a.agrees_up_to_mirror(b),
        "burau_charpoly_agree": cp_long == cp_short,
        "pass": a.agrees_up_to_mirror(b),
    }


# --- generalised rosettes (experimental) --------------------------------


def generalized_rosette(s: int, k: int, eps) -> BraidWord:
    return rosette_braid(RosetteParams(s, k, tuple(eps)))


def search_realization(word: BraidWord, n_max: int, m_max: int, cap: int = JONES_CAP) -> list[CurveParams]:
    """
    Z(s, n, m) at generic phase whose invariants agree with the closure of
    ``word`` up to mirror. Matching invariants are evidence, not proof.
    """
    s = word.strands
    target = invariant_set(word, cap)
    hits = []
    for n in range(s + 1, n_max + 1):
        if math.gcd(n, s) != 1 or 2 * s >= n:
            continue
        for m in range(1, m_max + 1):
            params = CurveParams.generic(s, n, m)
            if invariant_set(extract_braid(params), cap).agrees_up_to_mirror(target):
                hits.append(params)
    return hits
