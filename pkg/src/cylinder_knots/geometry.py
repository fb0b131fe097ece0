"""
Projected billiard curves in the unit disk and their crossings.

The billiard curve Z(s, n, m, phi) projects onto a star polygon with n
vertices e^{2 pi i s k / n}. The parametrisation is proportional to arc
length with total length 1, so chord k occupies t in [k/n, (k+1)/n] and its
midpoint sits at t = (2k+1)/(2n).

Two chords whose normals differ by 2 pi b / n (1 <= b < s) meet at a point
whose offset from either chord midpoint is r_b / (2n) in parameter units,
with r_b = tan(pi b/n) / tan(pi s/n). Every crossing parameter therefore
has the exact shape (k + eps * r_b) / (2n), and the rational and
irrational parts are kept apart. Numeric values only appear as rational
interval enclosures of r_b (mpmath interval arithmetic), refined until a
sign or a floor is certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np
from mpmath import libmp
from mpmath.ctx_iv import MPIntervalContext

from .errors import InternalContradiction, ParameterError, PrecisionError, SingularPhaseError

START_PREC = 128
MAX_PREC = 2048
MIN_MARGIN = Fraction(1, 2**256)


def check_standing(s: int, n: int) -> None:
    if s < 1 or n < 1:
        raise ParameterError(f"s and n must be positive, got s={s}, n={n}")
    if math.gcd(s, n) != 1:
        raise ParameterError(f"gcd(s, n) must be 1, got gcd({s}, {n}) = {math.gcd(s, n)}")
    if n < 2 * s + 1:
        raise ParameterError(f"need n >= 2s+1, got s={s}, n={n}")


# --- certified enclosures ------------------------------------------------


@lru_cache(maxsize=None)
def _dyadic_enclosure(b: int, s: int, n: int, prec: int) -> tuple[int, int, int]:
    """(L, H, P) with L / 2^P <= tan(pi b/n) / tan(pi s/n) <= H / 2^P."""
    ctx = MPIntervalContext()
    ctx.prec = prec
    x = ctx.tan(ctx.pi * b / n) / ctx.tan(ctx.pi * s / n)
    ends = []
    for raw in x._mpi_:
        p, q = libmp.to_rational(raw)
        ends.append((int(p), int(q)))
    big = max(q for _, q in ends)
    (pl, ql), (ph, qh) = ends
    return pl * (big // ql), ph * (big // qh), big.bit_length() - 1


def tan_ratio_enclosure(b: int, s: int, n: int, prec: int) -> tuple[Fraction, Fraction]:
    """Rational interval containing tan(pi b/n) / tan(pi s/n)."""
    lo, hi, p = _dyadic_enclosure(b, s, n, prec)
    return Fraction(lo, 1 << p), Fraction(hi, 1 << p)


def _rational(raw) -> Fraction:
    p, q = libmp.to_rational(raw)
    return Fraction(int(p), int(q))


@dataclass(frozen=True)
class Affine:
    """The real number const + coeff * r_b, with r_b fixed by ``level`` = (b, s, n)."""

    const: Fraction
    coeff: Fraction = Fraction(0)
    level: tuple[int, int, int] | None = None

    def _same_level(self, other: Affine) -> tuple[int, int, int] | None:
        if self.coeff and other.coeff and self.level != other.level:
            raise ValueError("cannot combine values over different tan ratios")
        return self.level if self.coeff else other.level

    def __add__(self, other: Affine) -> Affine:
        level = self._same_level(other)
        return Affine(self.const + other.const, self.coeff + other.coeff, level)

    def __neg__(self) -> Affine:
        return Affine(-self.const, -self.coeff, self.level)

    def __sub__(self, other: Affine) -> Affine:
        return self + (-other)

    def scale(self, k) -> Affine:
        return Affine(self.const * k, self.coeff * k, self.level)

    def shift(self, c) -> Affine:
        return Affine(self.const + c, self.coeff, self.level)

    def enclosure(self, prec: int = START_PREC) -> tuple[Fraction, Fraction]:
        if not self.coeff:
            return self.const, self.const
        lo, hi = tan_ratio_enclosure(*self.level, prec)
        a = self.const + self.coeff * lo
        b = self.const + self.coeff * hi
        return (a, b) if a <= b else (b, a)

    def _scaled_ends(self, prec: int) -> tuple[int, int, int]:
        """Integers (A, B, D), D > 0, with the value enclosed by [A/D, B/D]."""
        L, H, P = _dyadic_enclosure(*self.level, prec)
        p0, q0 = self.const.numerator, self.const.denominator
        p1, q1 = self.coeff.numerator, self.coeff.denominator
        base = (p0 * q1) << P
        a, b = base + p1 * q0 * L, base + p1 * q0 * H
        return min(a, b), max(a, b), (q0 * q1) << P

    def __float__(self) -> float:
        lo, hi = self.enclosure()
        return float((lo + hi) / 2)

    def sign(self) -> int:
        """Certified sign. Zero only when the value is exactly zero."""
        if not self.coeff:
            return (self.const > 0) - (self.const < 0)
        prec = START_PREC
        while prec <= MAX_PREC:
            a, b, den = self._scaled_ends(prec)
            if a > 0:
                return 1
            if b < 0:
                return -1
            if (b - a) * MIN_MARGIN.denominator < den:
                raise PrecisionError(f"value {self} within 2^-256 of zero")
            prec *= 2
        raise PrecisionError(f"sign of {self} not certified at {MAX_PREC} bits")

    def floor(self) -> int:
        """Certified floor; raises PrecisionError if the value is (numerically) an integer."""
        if not self.coeff:
            return math.floor(self.const)
        prec = START_PREC
        while prec <= MAX_PREC:
            a, b, den = self._scaled_ends(prec)
            fa, ra = divmod(a, den)
            if fa == b // den and ra:
                return fa
            if (b - a) * MIN_MARGIN.denominator < den:
                raise PrecisionError(f"value {self} within 2^-256 of an integer")
            prec *= 2
        raise PrecisionError(f"floor of {self} not certified at {MAX_PREC} bits")


# --- curve parameters ----------------------------------------------------


@dataclass(frozen=True)
class ExactParam:
    """Curve parameter t = (k + eps * r_b) / (2n); eps == 0 marks vertices and midpoints."""

    s: int
    n: int
    k: int
    eps: int = 0
    b: int = 0

    def __post_init__(self):
        if self.eps not in (-1, 0, 1):
            raise ParameterError(f"eps must be -1, 0 or 1, got {self.eps}")
        if self.eps and not 1 <= self.b < self.s:
            raise ParameterError(f"level b={self.b} outside [1, {self.s - 1}]")

    @property
    def value(self) -> Affine:
        den = 2 * self.n
        if not self.eps:
            return Affine(Fraction(self.k, den))
        return Affine(Fraction(self.k, den), Fraction(self.eps, den), (self.b, self.s, self.n))

    def enclosure(self, prec: int = START_PREC) -> tuple[Fraction, Fraction]:
        return self.value.enclosure(prec)

    def __float__(self) -> float:
        return float(self.value)

    def to_json(self) -> dict:
        return {"k": self.k, "eps": self.eps, "b": self.b}


@dataclass(frozen=True)
class CurveParams:
    s: int
    n: int
    m: int
    phi: Fraction = Fraction(0)

    def __post_init__(self):
        check_standing(self.s, self.n)
        if self.m < 1:
            raise ParameterError(f"m must be positive, got {self.m}")
        phi = Fraction(self.phi)
        if not 0 <= phi < 1:
            raise ParameterError(f"phase must lie in [0, 1), got {phi}")
        object.__setattr__(self, "phi", phi)
        if self.s > 1 and phi in _forbidden_phases(self.s, self.n, self.m):
            raise SingularPhaseError(f"phase {phi} is singular for Z({self.s},{self.n},{self.m})")

    @classmethod
    def generic(cls, s: int, n: int, m: int) -> CurveParams:
        return cls(s, n, m, generic_phase(s, n, m))

    def __str__(self):
        return f"Z({self.s},{self.n},{self.m},{self.phi})"


@dataclass(frozen=True)
class Crossing:
    """
    A double point of the projection.

    ``param_a`` lies past the midpoint of its chord (eps = +1, the strand is
    moving away from the centre), ``param_b`` before it (eps = -1, moving
    inwards). The crossing sits at angle pi * slot / n on the circle of
    radius cos(pi s/n) / cos(pi b/n).
    """

    param_a: ExactParam
    param_b: ExactParam
    level: int
    slot: int
    point: tuple[float, float] = field(compare=False)

    @property
    def angle(self) -> Fraction:
        """Angular position in units of pi."""
        return Fraction(self.slot, self.n)

    @property
    def n(self) -> int:
        return self.param_a.n


def vertices(s: int, n: int) -> np.ndarray:
    check_standing(s, n)
    ang = 2 * np.pi * s * np.arange(n) / n
    return np.column_stack([np.cos(ang), np.sin(ang)])


def curve_point(t: float, s: int, n: int) -> tuple[float, float]:
    """Position of the projected curve at parameter t (linear along chords)."""
    t = t % 1.0
    x = t * n
    k = min(int(x), n - 1)
    u = x - k
    a0 = 2 * math.pi * s * k / n
    a1 = 2 * math.pi * s * (k + 1) / n
    return (
        (1 - u) * math.cos(a0) + u * math.cos(a1),
        (1 - u) * math.sin(a0) + u * math.sin(a1),
    )


@lru_cache(maxsize=None)
def _crossings(s: int, n: int) -> tuple[Crossing, ...]:
    s_inv = pow(s, -1, n)
    apothem = math.cos(math.pi * s / n)
    out = []
    for k in range(n):
        for b in range(1, s):
            k2 = (k + b * s_inv) % n
            slot = (s * (2 * k + 1) + b) % (2 * n)
            r = apothem / math.cos(math.pi * b / n)
            ang = math.pi * slot / n
            out.append(
                Crossing(
                    ExactParam(s, n, 2 * k + 1, 1, b),
                    ExactParam(s, n, 2 * k2 + 1, -1, b),
                    b,
                    slot,
                    (r * math.cos(ang), r * math.sin(ang)),
                )
            )
    return tuple(out)


def chord_crossings(s: int, n: int) -> list[Crossing]:
    """All n(s-1) crossings of the star polygon {n/s}."""
    check_standing(s, n)
    return list(_crossings(s, n))


# --- heights and phases --------------------------------------------------


def sawtooth(x: Affine) -> Affine:
    """g(x) = 2|x - floor(x) - 1/2| as an exact affine value."""
    y = x.shift(-x.floor()).scale(2).shift(-1)
    return y if y.sign() >= 0 else -y


def height(t: ExactParam, m: int, phi) -> Affine:
    """Height g(m t + phi) of the curve at an exact parameter."""
    return sawtooth(t.value.scale(m).shift(Fraction(phi)))


def crossing_sign(c: Crossing, m: int, phi) -> int:
    """+1 when the inward-moving strand (param_b) is on top, -1 otherwise."""
    diff = height(c.param_b, m, phi) - height(c.param_a, m, phi)
    sgn = diff.sign()
    if sgn == 0:
        raise SingularPhaseError(f"crossing at slot {c.slot}, level {c.level} is singular for m={m}, phi={phi}")
    return sgn


def _check_removable(c: Crossing, m: int) -> None:
    diff = (c.param_a.value - c.param_b.value).scale(m)
    try:
        diff.floor()
    except PrecisionError as exc:
        raise InternalContradiction(
            f"m(t1 - t2) is numerically an integer at slot {c.slot}, level {c.level}, m={m}"
        ) from exc


@lru_cache(maxsize=None)
def _bad_phases(s: int, n: int, m: int) -> frozenset[Fraction]:
    out = set()
    for c in _crossings(s, n):
        _check_removable(c, m)
        # t1 + t2 = (k_a + k_b) / (2n) exactly; irrational parts cancel.
        x = Fraction(-m * (c.param_a.k + c.param_b.k), 2 * n) % 1
        out.add(x / 2)
        out.add(x / 2 + Fraction(1, 2))
    return frozenset(out)


def bad_phases(s: int, n: int, m: int) -> list[Fraction]:
    """Sorted phases phi in [0, 1) at which some crossing becomes a double point."""
    check_standing(s, n)
    if m < 1:
        raise ParameterError(f"m must be positive, got {m}")
    return sorted(_bad_phases(s, n, m))


def vertex_extremum_phases(n: int, m: int) -> frozenset[Fraction]:
    """Phases putting a maximum or minimum on a boundary vertex."""
    out = set()
    for k in range(n):
        x = Fraction(-m * k, n) % 1
        out.add(x)
        out.add((x + Fraction(1, 2)) % 1)
    return frozenset(out)


def _forbidden_phases(s: int, n: int, m: int) -> frozenset[Fraction]:
    return _bad_phases(s, n, m) | vertex_extremum_phases(n, m)


def phase_cells(s: int, n: int, m: int) -> list[Fraction]:
    """One representative (the midpoint) for every open interval between forbidden phases."""
    check_standing(s, n)
    if s == 1:
        return [Fraction(0)]
    pts = sorted(_forbidden_phases(s, n, m))
    mids = []
    for i, p in enumerate(pts):
        q = pts[i + 1] if i + 1 < len(pts) else pts[0] + 1
        mids.append(((p + q) / 2) % 1)
    return sorted(mids)


def generic_phase(s: int, n: int, m: int) -> Fraction:
    """Midpoint of the widest gap between forbidden phases; ties go to the smallest midpoint."""
    check_standing(s, n)
    if m < 1:
        raise ParameterError(f"m must be positive, got {m}")
    if not _bad_phases(s, n, m):
        return Fraction(0)
    pts = sorted(_forbidden_phases(s, n, m))
    best = None
    for i, p in enumerate(pts):
        q = pts[i + 1] if i + 1 < len(pts) else pts[0] + 1
        key = (-(q - p), ((p + q) / 2) % 1)
        if best is None or key < best:
            best = key
    return best[1]


def winding_number(s: int, n: int) -> int:
    """Winding number of the projected polygon about the centre."""
    pts = vertices(s, n)
    ang = np.arctan2(pts[:, 1], pts[:, 0])
    d = np.diff(np.append(ang, ang[0]))
    d = (d + np.pi) % (2 * np.pi) - np.pi
    return int(round(d.sum() / (2 * np.pi)))


# --- rationality of tan ratios, checked by scanning ---------------------


def tan_ratio_rationality_scan(max_denominator: int, tol: float = 1e-12) -> list[tuple[Fraction, Fraction, Fraction]]:
    """
    Scan rationals 0 < beta < alpha < 1/2 with denominators up to Q for
    tan(pi alpha) / tan(pi beta) being a rational with denominator up to Q.

    Returns the (alpha, beta, lambda) hits. Candidates come from the best
    rational approximation (continued-fraction convergents).
    """
    Q = max_denominator
    if Q < 6:
        raise ParameterError("max_denominator must be at least 6")
    rats = sorted({Fraction(p, q) for q in range(2, Q + 1) for p in range(1, q) if 2 * p < q})
    with mpmath.workdps(40):
        tans = [mpmath.tan(mpmath.pi * mpmath.mpf(r.numerator) / r.denominator) for r in rats]
        hits = []
        for i, beta in enumerate(rats):
            for j in range(i + 1, len(rats)):
                ratio = tans[j] / tans[i]
                exact = _rational(ratio._mpf_)
                lam = exact.limit_denominator(Q)
                if abs(ratio - mpmath.mpf(lam.numerator) / lam.denominator) < tol:
                    hits.append((rats[j], beta, lam))
    return hits
