"""
Integer Laurent polynomials in one variable.

Coefficients are exact Python integers. A polynomial is stored as the
lowest exponent plus a dense coefficient tuple with nonzero ends, so
equality and hashing are structural.

Text format: ``c_lo ... c_hi @ lo``, e.g. ``1 -1 1 @ -1`` is t^-1 - 1 + t.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    __slots__ = ("lo", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), lo: int = 0):
        c = [int(x) for x in coeffs]
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        self.coeffs = tuple(c[start:end])
        self.lo = lo + start if self.coeffs else 0

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls([c])

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> LaurentPoly:
        return cls([c], exp)

    # --- structure -------------------------------------------------------

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, int]:
        return {self.lo + i: c for i, c in enumerate(self.coeffs) if c}

    def __getitem__(self, exp: int) -> int:
        i = exp - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def span(self) -> int:
        return self.hi - self.lo if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.lo == other.lo

    def __hash__(self):
        return hash((self.lo, self.coeffs))

    # --- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.lo - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.lo - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.lo)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.lo + other.lo)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                return LaurentPoly([self.coeffs[0] ** k], self.lo * k)
            raise ValueError("negative power of a non-unit")
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly(self.coeffs, self.lo + k) if self.coeffs else self

    def reflect(self) -> LaurentPoly:
        """Substitute t -> 1/t."""
        return LaurentPoly(self.coeffs[::-1], -self.hi) if self.coeffs else self

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ArithmeticError if a remainder is left."""
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.coeffs:
            return LaurentPoly()
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        nq = len(num) - len(den) + 1
        if nq <= 0:
            raise ArithmeticError("inexact Laurent division")
        q = [0] * nq
        for i in range(nq - 1, -1, -1):
            c = num[i + len(den) - 1]
            if c % lead:
                raise ArithmeticError("inexact Laurent division")
            c //= lead
            q[i] = c
            if c:
                for j, d in enumerate(den):
                    num[i + j] -= c * d
        if any(num):
            raise ArithmeticError("inexact Laurent division")
        return LaurentPoly(q, self.lo - other.lo)

    def __call__(self, x):
        """Evaluate at an int or Fraction (nonzero when negative exponents occur)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.lo >= 0:
            return acc * x ** self.lo
        result = Fraction(acc) / Fraction(x) ** (-self.lo)
        return int(result) if result.denominator == 1 else result

    # --- normalisation ---------------------------------------------------

    def is_symmetric(self) -> bool:
        """True when p(t) == p(1/t) exactly (centred at exponent 0)."""
        return self == self.reflect()

    def symmetrized(self) -> LaurentPoly:
        """Shift by a power of t so the support is centred at 0 (span must be even)."""
        if not self.coeffs:
            return self
        if (self.lo + self.hi) % 2:
            raise ValueError("odd span cannot be centred")
        return self.shift(-(self.lo + self.hi) // 2)

    # --- text ------------------------------------------------------------

    def to_text(self) -> str:
        if not self.coeffs:
            return "0 @ 0"
        return " ".join(str(c) for c in self.coeffs) + f" @ {self.lo}"

    @classmethod
    def from_text(cls, text: str) -> LaurentPoly:
        body, sep, lo = text.partition("@")
        if not sep:
            raise ValueError(f"missing '@ offset' in {text!r}")
        return cls([int(x) for x in body.split()], int(lo))

    def __repr__(self):
        return f"LaurentPoly({list(self.coeffs)!r}, lo={self.lo})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(self.hi, self.lo - 1, -1):
            c = self[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


T = LaurentPoly([1], 1)
ONE = LaurentPoly([1])
