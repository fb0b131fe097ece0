"""
Symmetry and necessary conditions for cylinder knots.

A cylinder knot with d = gcd(n, m) > 1 is invariant under rotation by 2pi/d
about the axis; its factor knot is the closure of one period of the braid.
The factor knot is ribbon, so its determinant is a square and its signature
and Arf invariant vanish. These are the checks made here. A pass shows the
invariants are consistent with ribbonness; it does not prove it.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .braid import BraidWord, blocks, extract_braid, from_blocks
from .errors import ParameterError, PeriodicityError
from .geometry import CurveParams, winding_number
from .invariants import JONES_CAP, InvariantSet, fox_milnor_search, invariant_set, is_square
from .laurent import LaurentPoly


def max_billiard_period(n: int, m: int) -> int:
    if n < 1 or m < 1:
        raise ParameterError(f"n and m must be positive, got n={n}, m={m}")
    return math.gcd(n, m)


def factor_braid(word: BraidWord, d: int) -> BraidWord:
    """The first n/d blocks of a d-periodic cylinder braid."""
    if d < 1:
        raise ParameterError(f"period must be positive, got {d}")
    if d == 1:
        return word
    blks = blocks(word)
    n = len(blks)
    if n % d:
        raise PeriodicityError(f"period {d} does not divide the block count {n}")
    c = n // d
    for i in range(c, n):
        if blks[i] != blks[i - c]:
            raise PeriodicityError(f"block {i} differs from block {i - c}; word is not {d}-periodic")
    return from_blocks(word.strands, blks[:c])


@dataclass(frozen=True)
class ConditionReport:
    params: CurveParams
    d: int
    linking: int
    factor_word: BraidWord
    factor_invariants: InvariantSet
    det_square: bool
    signature_zero: bool
    arf_zero: bool
    spa_expected: bool
    fox_milnor_witness: LaurentPoly | None
    reasons: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.det_square and self.signature_zero and self.arf_zero

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        p = self.params
        return {
            "params": {"s": p.s, "n": p.n, "m": p.m, "phi": str(p.phi)},
            "d": self.d,
            "linking": self.linking,
            "factor_word": str(self.factor_word),
            "factor_invariants": self.factor_invariants.to_json(),
            "det_square": self.det_square,
            "signature_zero": self.signature_zero,
            "arf_zero": self.arf_zero,
            "spa_expected": self.spa_expected,
            "fox_milnor_witness": None if self.fox_milnor_witness is None else self.fox_milnor_witness.to_text(),
            "verdict": self.verdict,
            "reasons": list(self.reasons),
        }


def check_necessary(params: CurveParams, jones_cap: int = JONES_CAP, fox_milnor: bool = True) -> ConditionReport:
    """Run the ribbon-consistency checks on the factor knot of Z(s, n, m, phi)."""
    s, n, m = params.s, params.n, params.m
    d = max_billiard_period(n, m)
    word = extract_braid(params)
    factor = factor_braid(word, d) if s > 1 else word
    inv = invariant_set(factor, jones_cap)
    det_square = is_square(inv.det)
    sig_zero = inv.signature == 0
    arf_zero = inv.arf == 0
    spa = (n // d) % 2 == 0
    witness = fox_milnor_search(inv.alexander) if fox_milnor else None

    reasons = []
    reasons.append(f"det {inv.det} " + ("is a square" if det_square else "is not a square"))
    reasons.append(f"signature {inv.signature}")
    reasons.append(f"Arf invariant {inv.arf}")
    if witness is not None:
        reasons.append(f"Fox-Milnor factor found: Delta = F(t) F(1/t) with F = {witness}")
    elif fox_milnor:
        reasons.append("no Fox-Milnor factor found within the search bounds")
    if spa:
        # symmetry of Delta is automatic after normalisation, so it is not evidence
        reasons.append("n/d even: factor expected strongly positive amphicheiral; signature 0 is the checkable consequence")
    if det_square and sig_zero and arf_zero:
        reasons.append("consistent with a ribbon factor knot (necessary conditions only, not a proof)")
    else:
        reasons.append("factor knot cannot be ribbon: a cylinder-knot invariant check failed")
    return ConditionReport(
        params, d, winding_number(s, n), factor, inv, det_square, sig_zero, arf_zero, spa, witness, tuple(reasons)
    )


# --- exclusion of abstract knots -----------------------------------------


@dataclass(frozen=True)
class KnotDossier:
    """Caller-supplied facts about a knot; ``periods`` must be the complete list."""

    name: str
    det: int
    ribbon: bool
    periods: tuple[tuple[int, int], ...] = ()
    bridge: int = 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "det": self.det,
            "ribbon": self.ribbon,
            "periods": [list(p) for p in self.periods],
            "bridge": self.bridge,
        }


def exclusion_check(k: KnotDossier) -> dict:
    """
    Decide whether the dossier rules the knot out as a cylinder knot.

    A cylinder knot is periodic (linking number s with the axis, s at least
    the bridge number) or has d = 1 and is then ribbon itself.
    """
    reasons = []
    if k.ribbon:
        reasons.append("knot is ribbon, so it is not excluded")
        return {"name": k.name, "cylinder_possible": True, "reasons": reasons}
    reasons.append("knot is not ribbon, so it would need a cyclic period")
    if not k.periods:
        reasons.append("knot has no cyclic period")
        if not is_square(k.det):
            reasons.append(f"det {k.det} is not a square, confirming it is not ribbon")
        excluded = True
    else:
        small = [(q, lam) for q, lam in k.periods if abs(lam) < k.bridge]
        excluded = len(small) == len(k.periods)
        for q, lam in k.periods:
            cmp = "<" if abs(lam) < k.bridge else ">="
            reasons.append(f"period {q} has linking number {lam}, |{lam}| {cmp} bridge number {k.bridge}")
        if excluded:
            reasons.append("every period links the axis fewer times than the bridge number")
            if not is_square(k.det):
                reasons.append(f"det {k.det} is not a square, confirming it is not ribbon")
    return {"name": k.name, "cylinder_possible": not excluded, "reasons": reasons}


def _parse_periods(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for item in filter(None, (x.strip() for x in text.split(";"))):
        q, lam = item.split(":")
        out.append((int(q), int(lam)))
    return tuple(out)


def load_dossiers(path: str | Path | None = None) -> dict[str, KnotDossier]:
    """Read a dossier CSV (name,det,ribbon,periods,bridge); periods as ``q:lambda;...``."""
    if path is None:
        text = resources.files("cylinder_knots").joinpath("data/dossiers.csv").read_text()
    else:
        text = Path(path).read_text()
    out = {}
    for row in csv.DictReader(text.splitlines()):
        out[row["name"]] = KnotDossier(
            row["name"],
            int(row["det"]),
            row["ribbon"].strip().lower() in ("1", "true", "yes"),
            _parse_periods(row["periods"]),
            int(row["bridge"]),
        )
    return out
