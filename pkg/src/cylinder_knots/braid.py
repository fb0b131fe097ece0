"""
Closed-braid words of cylinder knots.

The knot winds s times around the cylinder axis and is monotone in the
angular coordinate, so reading crossings counterclockwise gives a closed
braid on s strands. Strand positions are counted from the outside: the
outermost crossing circle (level b = s-1) carries sigma_1, and in general
level b carries sigma_{s-b}. With angle slots pi*j/n numbered from 0+,
slots (2i+1, 2i+2) form block i; the odd slot holds the odd generators, so
every block reads odd-j letters first, then even-j letters.

A letter has sign +1 (sigma_j) when the strand moving inwards, from
position j to j+1, passes over. Knots are only ever identified up to
mirror image, so this convention is fixed once and used everywhere.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import geometry
from .errors import BraidParseError, BraidStructureError, ParameterError, RunStructureViolation
from .geometry import Crossing, CurveParams, ExactParam


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(j), int(e)) for j, e in self.letters)
        for j, e in letters:
            if not 1 <= j < self.strands:
                raise ParameterError(f"generator s{j} out of range for {self.strands} strands")
            if e not in (1, -1):
                raise ParameterError(f"letter sign must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise ParameterError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        return BraidWord(self.strands, self.letters * k)

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple((j, -e) for j, e in self.letters))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((j, -e) for j, e in reversed(self.letters)))

    def permutation(self) -> tuple[int, ...]:
        """perm[p] is the final position of the strand that starts at position p (0-based)."""
        where = list(range(self.strands))
        at = list(range(self.strands))
        for j, _ in self.letters:
            a, b = at[j - 1], at[j]
            at[j - 1], at[j] = b, a
            where[a], where[b] = j, j - 1
        return tuple(where)

    def components(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for p in range(self.strands):
            if not seen[p]:
                count += 1
                while not seen[p]:
                    seen[p] = True
                    p = perm[p]
        return count

    def is_knot(self) -> bool:
        return self.components() == 1

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def __str__(self):
        return format_braid(self)


_LETTER = re.compile(r"^s(\d+)(\^(-?1))?$")


def format_braid(word: BraidWord) -> str:
    return " ".join(f"s{j}" if e > 0 else f"s{j}^-1" for j, e in word.letters)


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``s1 s2^-1 s1``; the strand count defaults to max generator + 1."""
    letters = []
    for tok in text.split():
        mt = _LETTER.match(tok)
        if not mt:
            raise BraidParseError(f"bad braid letter {tok!r}")
        e = int(mt.group(3)) if mt.group(3) else 1
        letters.append((int(mt.group(1)), e))
    if strands is None:
        strands = max((j for j, _ in letters), default=0) + 1
    if any(j < 1 or j >= strands for j, _ in letters):
        raise BraidParseError(f"generator out of range for {strands} strands in {text!r}")
    return BraidWord(strands, tuple(letters))


# --- diagrams ------------------------------------------------------------


@dataclass(frozen=True)
class ResolvedCrossing:
    crossing: Crossing
    block: int
    generator: int
    sign: int

    @property
    def level(self) -> int:
        return self.crossing.level

    @property
    def over(self) -> ExactParam:
        return self.crossing.param_b if self.sign > 0 else self.crossing.param_a

    @property
    def under(self) -> ExactParam:
        return self.crossing.param_a if self.sign > 0 else self.crossing.param_b


@dataclass(frozen=True)
class Diagram:
    params: CurveParams
    crossings: tuple[ResolvedCrossing, ...]

    def braid(self) -> BraidWord:
        return BraidWord(self.params.s, tuple((c.generator, c.sign) for c in self.crossings))


def _block_slot(slot: int, n: int) -> int:
    return slot if slot else 2 * n


def diagram(params: CurveParams) -> Diagram:
    s, n = params.s, params.n
    out = []
    for c in geometry.chord_crossings(s, n):
        slot = _block_slot(c.slot, n)
        sign = geometry.crossing_sign(c, params.m, params.phi)
        out.append(ResolvedCrossing(c, (slot - 1) // 2, s - c.level, sign))
    out.sort(key=lambda r: (_block_slot(r.crossing.slot, n), r.generator))
    return Diagram(params, tuple(out))


def extract_braid(params: CurveParams) -> BraidWord:
    """Closed braid of Z(s, n, m, phi), read counterclockwise from angle 0+."""
    return diagram(params).braid()


# --- block structure and sign vectors ------------------------------------


def block_order(s: int) -> list[int]:
    return list(range(1, s, 2)) + list(range(2, s, 2))


def blocks(word: BraidWord) -> list[tuple[tuple[int, int], ...]]:
    """Split a cylinder braid into blocks; raises if the block invariant fails."""
    s = word.strands
    if s < 2:
        if word.letters:
            raise BraidStructureError("one-strand braid cannot have letters")
        return []
    size = s - 1
    if len(word) % size:
        raise BraidStructureError(f"{len(word)} letters is not a multiple of s-1={size}")
    order = block_order(s)
    out = []
    for i in range(0, len(word), size):
        blk = word.letters[i : i + size]
        if [j for j, _ in blk] != order:
            raise BraidStructureError(f"block {i // size} has generators {[j for j, _ in blk]}, expected {order}")
        out.append(blk)
    return out


def from_blocks(s: int, blks: Iterable[Sequence[tuple[int, int]]]) -> BraidWord:
    return BraidWord(s, tuple(itertools.chain.from_iterable(blks)))


@dataclass(frozen=True)
class SignVectors:
    """v[j][i] is the sign of generator j in block i (blocks 0-based)."""

    v: dict[int, tuple[int, ...]]

    @property
    def n(self) -> int:
        return len(next(iter(self.v.values()))) if self.v else 0

    def __getitem__(self, j: int) -> tuple[int, ...]:
        return self.v[j]


def sign_vectors(word: BraidWord) -> SignVectors:
    blks = blocks(word)
    v = {j: [] for j in range(1, word.strands)}
    for blk in blks:
        for j, e in blk:
            v[j].append(e)
    return SignVectors({j: tuple(x) for j, x in v.items()})


def from_sign_vectors(s: int, v: dict[int, Sequence[int]]) -> BraidWord:
    n = len(v[1]) if s > 1 else 0
    return from_blocks(s, ([(j, v[j][i]) for j in block_order(s)] for i in range(n)))


# --- run structure -------------------------------------------------------


@dataclass(frozen=True)
class RunResult:
    """Sign pattern of one v_j read along the progression b_j + i*a."""

    generator: int
    b: int | None
    leading: int
    runs: tuple[int, int]


def progression_step(s: int, n: int, m: int) -> int:
    """The step a with a*m == s (mod n) on the factor of period d = gcd(n, m)."""
    d = math.gcd(n, m)
    c = n // d
    if c == 1:
        return 0
    return (s * pow(m // d, -1, c)) % c


def _match_runs(vec: Sequence[int], a: int) -> tuple[int, int, tuple[int, int]] | None:
    c = len(vec)
    first = (c + 1) // 2
    for b in range(c):
        seq = [vec[(b + i * a) % c] for i in range(c)]
        lead = seq[0]
        if all(x == lead for x in seq[:first]) and all(x == -lead for x in seq[first:]):
            if c % 2 == 0 and lead < 0:
                continue
            return b, lead, (first, c - first)
    return None


def verify_run_structure(v: SignVectors, s: int, n: int, m: int) -> dict[int, RunResult]:
    """
    Check that every v_j splits into one run of +1 and one of -1 along step a.

    With d = gcd(n, m) > 1 the check runs on the first c = n/d entries (the
    factor braid), with step a taken modulo c. Constant vectors are accepted
    with an empty second run.
    """
    d = math.gcd(n, m)
    c = n // d
    if v.n != n:
        raise ParameterError(f"sign vectors have length {v.n}, expected {n}")
    a = progression_step(s, n, m)
    out = {}
    for j in range(1, s):
        full = v[j]
        vec = full[:c]
        if any(full[i] != vec[i % c] for i in range(n)):
            raise RunStructureViolation(f"v_{j} is not {c}-periodic", j, None)
        if all(x == vec[0] for x in vec):
            out[j] = RunResult(j, None, vec[0], (c, 0))
            continue
        hit = _match_runs(vec, a)
        if hit is None:
            bad = next(i for i in range(c) if vec[i] != vec[0])
            raise RunStructureViolation(f"v_{j}={vec} has no two-run pattern along step {a}", j, bad)
        b, lead, runs = hit
        out[j] = RunResult(j, b, lead, runs)
    return out


def critical_crossings(vj: Sequence[int], s: int, n: int, a: int) -> tuple:
    """
    Critical pairs (even n) or critical crossings (odd n) of one sign vector.

    Returns () for a constant vector, which has no sign change.
    """
    if all(x == vj[0] for x in vj):
        return ()
    hit = _match_runs(vj, a)
    if hit is None:
        raise RunStructureViolation(f"{tuple(vj)} has no two-run pattern along step {a}")
    b = hit[0]
    if n % 2 == 0:
        h = (n // 2) * a
        return ((b % n, (b + h) % n), ((b - a) % n, (b - a + h) % n))
    return (b % n, (b + (n - 1) // 2 * a) % n)


def two_possibility_check(s: int, n: int, m: int, m_max: int | None = None) -> dict:
    """
    Braids with the same v_1 differ only by negating whole sign vectors.

    v_1 is fixed (up to rotation) by the step a, so every m' <= m_max with
    gcd(n, m') = 1 and step +-a is realised at all generic phase cells. Up to
    rotation and mirror, each result must arise from the first one by
    negating some v_j with j >= 2. Returns the reference and the realised
    canonical words.
    """
    if math.gcd(n, m) != 1:
        raise ParameterError(f"needs gcd(n, m) = 1, got gcd({n}, {m}) = {math.gcd(n, m)}")
    a = progression_step(s, n, m)
    ms = [m]
    if m_max is not None:
        ms = [x for x in range(1, m_max + 1) if math.gcd(n, x) == 1 and progression_step(s, n, x) in (a, (-a) % n)]
    realized = sorted(
        {
            canonicalize(extract_braid(CurveParams(s, n, x, phi)))
            for x in ms
            for phi in geometry.phase_cells(s, n, x)
        },
        key=lambda w: _key(w.letters),
    )
    ref = realized[0]
    allowed = set()
    for signs in itertools.product((1, -1), repeat=max(s - 2, 0)):
        flips = dict(zip(range(2, s), signs))
        flips[1] = 1
        allowed.add(canonicalize(_flip(ref, flips)))
    outside = [w for w in realized if w not in allowed]
    if outside:
        raise RunStructureViolation(f"{format_braid(outside[0])} is not a sign flip of {format_braid(ref)}")
    return {"reference": ref, "realized": realized, "allowed": len(allowed)}


# --- canonical forms and enumeration -------------------------------------


def _key(letters) -> tuple:
    return tuple((j, 0 if e > 0 else 1) for j, e in letters)


def _reverse_blocks(s: int, blks: list) -> list:
    """Reversed letter order, re-cut so every block again starts with its odd letters."""
    n = len(blks)
    odd = [tuple(sorted(x for x in blk if x[0] % 2 == 1)) for blk in blks]
    even = [tuple(sorted(x for x in blk if x[0] % 2 == 0)) for blk in blks]
    return [odd[n - 1 - i] + even[(n - 2 - i) % n] for i in range(n)]


def canonicalize(word: BraidWord) -> BraidWord:
    """
    Least word, lexicographically, among block rotations, the mirror image,
    and the reversed reading (rotation of the cylinder about a horizontal axis).

    Positive letters sort before negative ones. All words in the orbit share
    the generator pattern, so only the sign strings are compared.
    """
    s = word.strands
    blks = blocks(word)
    if not blks:
        return word
    size = s - 1
    best = None
    for base in (blks, _reverse_blocks(s, blks)):
        signs = "".join("0" if e > 0 else "1" for blk in base for _, e in blk)
        flipped = signs.translate(str.maketrans("01", "10"))
        for text in (signs, flipped):
            for r in range(0, len(text), size):
                cand = text[r:] + text[:r]
                if best is None or cand < best:
                    best = cand
    order = block_order(s)
    letters = tuple((order[i % size], 1 if ch == "0" else -1) for i, ch in enumerate(best))
    return BraidWord(s, letters)


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})^q in block order (odd generators first)."""
    return from_blocks(p, ([(j, 1) for j in block_order(p)] for _ in range(q)))


def theorem_bound(s: int, n: int) -> Fraction:
    """(n+1) 2^(s-3) as an exact rational."""
    return Fraction(n + 1) * Fraction(2) ** (s - 3)


def _period_classes(n: int):
    """(c, a) pairs: c divides n, a a unit mod c taken once per pair {a, -a}."""
    for c in range(1, n + 1):
        if n % c:
            continue
        if c <= 2:
            yield c, c - 1
            continue
        for a in range(1, c):
            if math.gcd(a, c) == 1 and a <= c - a:
                yield c, a


def _flip(word: BraidWord, flips: dict[int, int]) -> BraidWord:
    return BraidWord(word.strands, tuple((j, e * flips[j]) for j, e in word.letters))


def enumerate_candidates(s: int, n: int) -> list[BraidWord]:
    """
    Canonical cylinder braids allowed for (s, n), over every period.

    For each c dividing n and each step a (up to sign), a representative
    m = (n/c) * m' with m' a = s (mod c) is realised at every generic phase
    cell; the remaining freedom, an independent sign for each v_j, is then
    applied and the results canonicalised.
    """
    geometry.check_standing(s, n)
    if s < 2:
        raise ParameterError("enumeration needs s >= 2")
    out = set()
    for c, a in _period_classes(n):
        d = n // c
        seeds = set()
        for step in {a % c, (-a) % c} if c > 1 else {0}:
            mp = (s * pow(step, -1, c)) % c if c > 1 else 1
            m = d * (mp or c)
            for phi in geometry.phase_cells(s, n, m):
                seeds.add(extract_braid(CurveParams(s, n, m, phi)))
        for w in seeds:
            for signs in itertools.product((1, -1), repeat=s - 1):
                out.add(canonicalize(_flip(w, dict(zip(range(1, s), signs)))))
    result = sorted(out, key=lambda w: _key(w.letters))
    if len(result) > theorem_bound(s, n):
        raise RunStructureViolation(f"{len(result)} candidates exceed the bound {theorem_bound(s, n)} for s={s}, n={n}")
    return result


def realize_sweep(s: int, n: int, m_max: int) -> dict[int, BraidWord]:
    if m_max < 1:
        raise ParameterError("m_max must be at least 1")
    return {m: canonicalize(extract_braid(CurveParams.generic(s, n, m))) for m in range(1, m_max + 1)}
