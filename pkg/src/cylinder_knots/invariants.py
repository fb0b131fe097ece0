"""
Classical invariants of closed braids, computed exactly.

Crossing convention: the letter sigma_j (sign +1) is a *negative* crossing
of the oriented closure, and sigma_j^-1 a positive one. This matches the
convention that positive crossings correspond to sigma_j^-1; in particular
the closure of sigma_1^3 is the left-handed trefoil with Jones polynomial
-t^-4 + t^-3 + t^-1 and signature +2. Alexander polynomial and determinant
do not see the difference.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .braid import BraidWord
from .errors import MultiComponentError, ParameterError
from .laurent import ONE, LaurentPoly

T = LaurentPoly([1], 1)
T_INV = LaurentPoly([1], -1)
ZERO = LaurentPoly()

JONES_CAP = 30


def _require_knot(word: BraidWord) -> None:
    if not word.is_knot():
        raise MultiComponentError(f"closure has {word.components()} components; a knot is required")


# --- Alexander polynomial via the reduced Burau representation -----------


def burau_generator(j: int, e: int, s: int) -> list[list[LaurentPoly]]:
    """Reduced Burau matrix of sigma_j^e on s strands, size (s-1) x (s-1)."""
    size = s - 1
    M = [[ONE if r == c else ZERO for c in range(size)] for r in range(size)]
    i = j - 1
    if e > 0:
        M[i][i] = -T
        if i > 0:
            M[i][i - 1] = T
        if i < size - 1:
            M[i][i + 1] = ONE
    else:
        M[i][i] = -T_INV
        if i > 0:
            M[i][i - 1] = ONE
        if i < size - 1:
            M[i][i + 1] = T_INV
    return M


def _apply_generator(M, j: int, e: int, s: int):
    """M * burau_generator(j, e, s); only columns j-2, j-1, j change (0-based)."""
    i = j - 1
    size = s - 1
    out = [row[:] for row in M]
    # the generator differs from I only in row i
    if e > 0:
        left, mid, right = T, -T, ONE
    else:
        left, mid, right = ONE, -T_INV, T_INV
    for r in range(size):
        x = M[r][i]
        if not x.coeffs:
            continue
        out[r][i] = mid * x
        if i > 0:
            out[r][i - 1] = M[r][i - 1] + left * x
        if i < size - 1:
            out[r][i + 1] = M[r][i + 1] + right * x
    return out


def burau_matrix(word: BraidWord) -> list[list[LaurentPoly]]:
    s = word.strands
    M = [[ONE if r == c else ZERO for c in range(s - 1)] for r in range(s - 1)]
    for j, e in word.letters:
        M = _apply_generator(M, j, e, s)
    return M


def laurent_det(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Division-free determinant: Laplace expansion memoised over column subsets."""
    n = len(M)
    if n == 0:
        return ONE
    # minors[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
    minors = {0: ONE}
    for r in range(n):
        nxt = {}
        for mask, val in minors.items():
            if not val.coeffs:
                continue
            sign_count = 0
            for c in range(n - 1, -1, -1):
                if mask >> c & 1:
                    sign_count += 1
                    continue
                entry = M[r][c]
                if entry.coeffs:
                    term = val * entry
                    if sign_count % 2:
                        term = -term
                    key = mask | (1 << c)
                    nxt[key] = nxt.get(key, ZERO) + term
        minors = nxt
    return minors.get((1 << n) - 1, ZERO)


def burau_charpoly(word: BraidWord) -> list[LaurentPoly]:
    """Coefficients of det(x I - B) in x, lowest first, B the reduced Burau matrix."""
    B = burau_matrix(word)
    size = len(B)
    coeffs = []
    for k in range(size + 1):
        r = size - k
        total = ZERO
        for cols in itertools.combinations(range(size), r):
            total = total + laurent_det([[B[a][b] for b in cols] for a in cols])
        coeffs.append(total if r % 2 == 0 else -total)
    return coeffs


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Centre the support at exponent 0 and fix the sign so that p(1) = 1."""
    p = p.symmetrized()
    if p(1) < 0:
        p = -p
    return p


def alexander(word: BraidWord) -> LaurentPoly:
    """Normalised Alexander polynomial of the closure (symmetric, Delta(1) = 1)."""
    _require_knot(word)
    s = word.strands
    if s == 1:
        return ONE
    B = burau_matrix(word)
    size = s - 1
    A = [[(ONE if r == c else ZERO) - B[r][c] for c in range(size)] for r in range(size)]
    num = laurent_det(A)
    den = LaurentPoly([1] * s)
    delta = normalize_alexander(num.divexact(den))
    if delta(1) != 1:
        raise ArithmeticError(f"Alexander polynomial {delta} does not evaluate to 1 at t=1")
    return delta


def determinant(delta: LaurentPoly) -> int:
    return abs(delta(-1))


def arf(det: int) -> int:
    if det % 2 == 0:
        raise ParameterError(f"Arf invariant needs an odd determinant, got {det}")
    return 0 if det % 8 in (1, 7) else 1


def is_square(k: int) -> bool:
    if k < 0:
        return False
    r = math.isqrt(k)
    return r * r == k


# --- Seifert matrix and signature ----------------------------------------


def seifert_matrix(word: BraidWord) -> list[list[int]]:
    """
    Seifert matrix of the braid-closure surface: one disk per strand and one
    half-twisted band per letter. The basis loop (i, r) runs between the r-th
    and (r+1)-th bands of generator i. Size is len(word) - s + 1.
    """
    _require_knot(word)
    s = word.strands
    occ: dict[int, list[tuple[int, int]]] = {j: [] for j in range(1, s)}
    for pos, (j, e) in enumerate(word.letters):
        occ[j].append((pos, -e))  # oriented crossing sign
    loops = []
    for j in range(1, s):
        bands = occ[j]
        for r in range(len(bands) - 1):
            loops.append((j, bands[r], bands[r + 1]))
    index = {}
    for k, (j, a, b) in enumerate(loops):
        index[(j, a[0])] = k
    size = len(loops)
    V = [[0] * size for _ in range(size)]
    for x, (j, (a, ea), (b, eb)) in enumerate(loops):
        if ea == eb:
            V[x][x] = -ea
        nxt = index.get((j, b))
        if nxt is not None:
            if eb > 0:
                V[x][nxt] = 1
            else:
                V[nxt][x] = -1
        for y, (j2, (c, _), (d, _)) in enumerate(loops):
            if j2 != j + 1:
                continue
            # interleaved loops on adjacent generators link once
            if a < c < b < d:
                V[x][y] = 1
            elif c < a < d < b:
                V[x][y] = -1
    return V


def signature(V: Sequence[Sequence[int]]) -> int:
    """Signature of V + V^T by exact congruence diagonalisation over Q."""
    n = len(V)
    S = [[Fraction(V[r][c] + V[c][r]) for c in range(n)] for r in range(n)]
    sig = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if S[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if S[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j gives S[i][i] = 2 S[i][j] != 0
            for c in range(n):
                S[i][c] += S[j][c]
            for r in range(n):
                S[r][i] += S[r][j]
            piv = i
        if piv != k:
            S[k], S[piv] = S[piv], S[k]
            for row in S:
                row[k], row[piv] = row[piv], row[k]
        p = S[k][k]
        sig += 1 if p > 0 else -1
        for r in range(k + 1, n):
            f = S[r][k] / p
            if f:
                for c in range(k, n):
                    S[r][c] -= f * S[k][c]
        for r in range(k + 1, n):
            S[r][k] = S[k][r] = Fraction(0)
        k += 1
    return sig


# --- Jones polynomial via a Temperley-Lieb transfer ----------------------


def _identity_matching(s: int) -> tuple[int, ...]:
    return tuple(list(range(s, 2 * s)) + list(range(s)))


def _cap_on_top(D: tuple[int, ...], i: int, s: int) -> tuple[tuple[int, ...], int]:
    """Stack the cup-cap e_i on top of D; return the new matching and closed loops."""
    # Top points i, i+1 of D are joined to each other through e_i's lower cup.
    match = list(D)
    a, b = match[i], match[i + 1]
    loops = 0
    if a == i + 1:
        loops = 1
    else:
        match[a], match[b] = b, a
    match[i], match[i + 1] = i + 1, i
    return tuple(match), loops


def _closure_loops(D: tuple[int, ...], s: int) -> int:
    seen = [False] * (2 * s)
    loops = 0
    for start in range(s):
        if seen[start]:
            continue
        loops += 1
        p = start
        while not seen[p]:
            seen[p] = True
            q = D[p]
            seen[q] = True
            p = q - s if q >= s else q + s  # closure arc joins bottom k to top k
    return loops


def kauffman_bracket(word: BraidWord) -> LaurentPoly:
    """Kauffman bracket of the closure in the variable A, normalised so the unknot is 1."""
    s = word.strands
    A = LaurentPoly([1], 1)
    A_INV = LaurentPoly([1], -1)
    delta = LaurentPoly([-1, 0, 0, 0, -1], -2)
    state = {_identity_matching(s): ONE}
    for j, e in word.letters:
        crossing = -e
        keep, cup = (A, A_INV) if crossing > 0 else (A_INV, A)
        nxt: dict[tuple[int, ...], LaurentPoly] = {}
        for D, poly in state.items():
            nxt[D] = nxt.get(D, ZERO) + poly * keep
            D2, loops = _cap_on_top(D, j - 1, s)
            nxt[D2] = nxt.get(D2, ZERO) + poly * cup * delta**loops
        state = {D: p for D, p in nxt.items() if p.coeffs}
    total = ZERO
    for D, poly in state.items():
        total = total + poly * delta ** (_closure_loops(D, s) - 1)
    return total


def jones_from_bracket(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    """(-A^3)^-w <K>, rewritten in t^(1/2) with A = t^(-1/4)."""
    f = bracket * LaurentPoly([(-1) ** (writhe % 2)], -3 * writhe)
    terms = {}
    for k, c in f.terms().items():
        if k % 2:
            raise ArithmeticError("odd power of A in normalised bracket")
        terms[-k // 2] = c
    return LaurentPoly.from_dict(terms)


def jones(word: BraidWord, cap: int = JONES_CAP) -> LaurentPoly | None:
    """
    Jones polynomial of the closure with exponents in units of t^(1/2).

    Returns None (inconclusive) when the word has more than ``cap`` letters.
    """
    if len(word) > cap:
        return None
    writhe = -word.exponent_sum()
    return jones_from_bracket(kauffman_bracket(word), writhe)


# --- ribbon obstructions -------------------------------------------------


def fox_milnor_search(delta: LaurentPoly, coeff_bound: int = 20, budget: int = 200_000) -> LaurentPoly | None:
    """
    Search for F in Z[t] with F(t) F(1/t) = Delta(t), coefficients bounded by
    ``coeff_bound``. Returns a witness with F(1) = 1, or None when none was
    found (which never proves that none exists).

    Coefficients are fixed from both ends inwards. With f_0 and f_D known,
    the coefficient of t^(D-k) is linear in the new pair (f_k, f_(D-k)), so
    only f_k is enumerated and f_(D-k) is solved for.
    """
    delta = normalize_alexander(delta)
    if delta == ONE:
        return ONE
    D = delta.hi
    target = [delta[k] for k in range(D + 1)]  # target[k] = sum_i f_i f_(i+k)
    total_sq = target[0]
    if total_sq <= 0:
        return None
    bound = min(coeff_bound, math.isqrt(total_sq))
    f = [0] * (D + 1)
    steps = [0]

    def lag_known(lag, k):
        # terms f_i f_(i+lag) with 0 < i < k, all already assigned
        return sum(f[i] * f[i + lag] for i in range(1, k))

    def rec(k, used):
        steps[0] += 1
        if steps[0] > budget:
            raise _Budget
        lo, hi = k, D - k
        if lo > hi:
            return all(sum(f[i] * f[i + j] for i in range(D - j + 1)) == target[j] for j in range(D + 1))
        if lo == hi:
            rest = target[k] - lag_known(k, k)
            coef = f[0] + f[D]
            cands = range(-bound, bound + 1) if coef == 0 else ([rest // coef] if rest % coef == 0 else [])
            for x in cands:
                if coef == 0 and rest != 0:
                    break
                if abs(x) <= bound and used + x * x <= total_sq:
                    f[k] = x
                    if rec(k + 1, used + x * x):
                        return True
            f[k] = 0
            return False
        lag = D - k
        for x in range(-bound, bound + 1):
            rest = target[lag] - lag_known(lag, k) - x * f[D]
            if rest % f[0]:
                continue
            y = rest // f[0]
            if abs(y) > bound or used + x * x + y * y > total_sq:
                continue
            f[k], f[hi] = x, y
            if rec(k + 1, used + x * x + y * y):
                return True
        f[k] = f[hi] = 0
        return False

    top = target[D]
    try:
        for a in range(1, bound + 1):
            if top % a:
                continue
            for sa in (a, -a):
                c = top // sa
                if abs(c) > bound or sa * sa + c * c > total_sq:
                    continue
                f[:] = [0] * (D + 1)
                f[0], f[D] = sa, c
                if rec(1, sa * sa + c * c):
                    F = LaurentPoly(f)
                    return -F if F(1) < 0 else F
    except _Budget:
        return None
    return None


class _Budget(Exception):
    pass


# --- bundles -------------------------------------------------------------


@dataclass(frozen=True)
class InvariantSet:
    alexander: LaurentPoly
    det: int
    signature: int
    arf: int
    jones: LaurentPoly | None = None

    def to_json(self) -> dict:
        return {
            "alexander": self.alexander.to_text(),
            "det": self.det,
            "signature": self.signature,
            "arf": self.arf,
            "jones": None if self.jones is None else self.jones.to_text(),
        }

    @classmethod
    def from_json(cls, data: dict) -> InvariantSet:
        return cls(
            LaurentPoly.from_text(data["alexander"]),
            int(data["det"]),
            int(data["signature"]),
            int(data["arf"]),
            None if data.get("jones") is None else LaurentPoly.from_text(data["jones"]),
        )

    def agrees_up_to_mirror(self, other: InvariantSet) -> bool:
        if self.alexander != other.alexander or self.det != other.det:
            return False
        if abs(self.signature) != abs(other.signature):
            return False
        if self.jones is not None and other.jones is not None:
            return self.jones in (other.jones, other.jones.reflect())
        return True


def invariant_set(word: BraidWord, cap: int = JONES_CAP) -> InvariantSet:
    delta = alexander(word)
    det = determinant(delta)
    return InvariantSet(delta, det, signature(seifert_matrix(word)), arf(det), jones(word, cap))
