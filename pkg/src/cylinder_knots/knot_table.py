"""
A small knot table and invariant-based identification.

Rows are generated from standard braid words by the invariant routines of
this package and shipped as ``data/knot_table.csv``. Identification is
up to mirror image: a row matches when Alexander polynomial and determinant
agree, the signatures agree up to sign, and Jones polynomials (when both
are known) agree up to t -> 1/t.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .braid import BraidWord, parse_braid, torus_braid
from .errors import ParameterError
from .invariants import InvariantSet, arf, determinant, invariant_set
from .laurent import LaurentPoly

HEADER = ["name", "alex_offset", "alex_coeffs", "det", "signature", "jones"]

# name -> braid word generating the row
SOURCE_WORDS: dict[str, tuple[int, str]] = {
    "0_1": (1, ""),
    "3_1": (2, "s1 s1 s1"),
    "4_1": (3, "s1 s2^-1 s1 s2^-1"),
    "5_1": (2, "s1 s1 s1 s1 s1"),
    "5_2": (3, "s1 s1 s1 s2 s1^-1 s2"),
    "7_1": (2, "s1 s1 s1 s1 s1 s1 s1"),
    "8_10": (3, "s1 s1 s1 s2^-1 s1 s1 s2^-1 s2^-1"),
    "8_18": (3, "s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1"),
    "8_19": (3, "(3,4)"),
    "9_1": (2, "s1 s1 s1 s1 s1 s1 s1 s1 s1"),
    "9_40": (4, "s1 s2^-1 s3 s1 s2^-1 s3 s1 s2^-1 s3"),
    "10_123": (3, "s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2^-1"),
    "10_124": (3, "(3,5)"),
    "T(3,7)": (3, "(3,7)"),
    "T(3,8)": (3, "(3,8)"),
    "T(3,10)": (3, "(3,10)"),
    "3_1#3_1": (3, "s1 s1 s1 s2 s2 s2"),
    "3_1#3_1*": (3, "s1 s1 s1 s2^-1 s2^-1 s2^-1"),
    "5_1#5_1*": (3, "s1 s1 s1 s1 s1 s2^-1 s2^-1 s2^-1 s2^-1 s2^-1"),
    "7_1#7_1*": (3, "s1 s1 s1 s1 s1 s1 s1 s2^-1 s2^-1 s2^-1 s2^-1 s2^-1 s2^-1 s2^-1"),
}


def source_word(name: str) -> BraidWord:
    strands, text = SOURCE_WORDS[name]
    if text.startswith("("):
        p, q = (int(x) for x in text.strip("()").split(","))
        return torus_braid(p, q)
    return parse_braid(text, strands)


@dataclass(frozen=True)
class KnotTableRow:
    name: str
    alexander: LaurentPoly
    det: int
    signature: int
    jones: LaurentPoly | None = None

    def __post_init__(self):
        if determinant(self.alexander) != self.det:
            raise ParameterError(f"row {self.name}: det {self.det} does not match |Delta(-1)|")

    def invariants(self) -> InvariantSet:
        return InvariantSet(self.alexander, self.det, self.signature, arf(self.det) if self.det % 2 else 0, self.jones)

    def to_csv_row(self) -> list[str]:
        return [
            self.name,
            str(self.alexander.lo),
            " ".join(str(c) for c in self.alexander.coeffs),
            str(self.det),
            str(self.signature),
            "" if self.jones is None else self.jones.to_text(),
        ]


def build_rows() -> list[KnotTableRow]:
    rows = []
    for name in SOURCE_WORDS:
        inv = invariant_set(source_word(name))
        rows.append(KnotTableRow(name, inv.alexander, inv.det, inv.signature, inv.jones))
    return rows


def dump_table(rows: list[KnotTableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in rows:
        w.writerow(r.to_csv_row())
    return buf.getvalue()


def load_table(path: str | Path | None = None) -> list[KnotTableRow]:
    if path is None:
        text = resources.files("cylinder_knots").joinpath("data/knot_table.csv").read_text()
    else:
        text = Path(path).read_text()
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != HEADER:
        raise ParameterError(f"knot table header must be {','.join(HEADER)}")
    rows = []
    for rec in reader:
        alex = LaurentPoly([int(c) for c in rec["alex_coeffs"].split()], int(rec["alex_offset"]))
        jones = LaurentPoly.from_text(rec["jones"]) if rec["jones"].strip() else None
        rows.append(KnotTableRow(rec["name"], alex, int(rec["det"]), int(rec["signature"]), jones))
    return rows


def _match(inv: InvariantSet, row: KnotTableRow) -> str | None:
    """'same' or 'mirror' when the row agrees with inv, else None."""
    if inv.alexander != row.alexander or inv.det != row.det:
        return None
    if abs(inv.signature) != abs(row.signature):
        return None
    same_sig = inv.signature == row.signature
    flip_sig = inv.signature == -row.signature
    if inv.jones is not None and row.jones is not None:
        same = same_sig and inv.jones == row.jones
        flip = flip_sig and inv.jones == row.jones.reflect()
    else:
        same, flip = same_sig, flip_sig
    if same:
        return "same"
    if flip:
        return "mirror"
    return None


def identify(inv: InvariantSet, rows: list[KnotTableRow] | None = None) -> list[dict]:
    """All table rows consistent with inv; more than one entry is a tie."""
    rows = load_table() if rows is None else rows
    out = []
    for row in rows:
        how = _match(inv, row)
        if how is not None:
            out.append({"name": row.name, "match": how})
    return out
