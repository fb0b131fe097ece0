"""
Independent reference computations used only by the tests.

None of these share code paths with the library routines they check.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath
import numpy as np

from cylinder_knots.laurent import LaurentPoly


def _int_det(M):
    """Bareiss fraction-free determinant of an integer matrix."""
    M = [row[:] for row in M]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if sw is None:
                return 0
            M[k], M[sw] = M[sw], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _interpolate(xs, ys):
    """Exact Lagrange interpolation; returns integer coefficients lowest first."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def wirtinger_arcs(letters, s):
    """
    Crossing list (over_arc, under_in, under_out, letter_sign) of the closed braid diagram,
    with arcs identified around the closure. Letter sign +1: the strand going
    from position j to j+1 is the over strand.
    """
    arc_at = list(range(s))
    next_arc = s
    crossings = []
    for j, e in letters:
        a, b = arc_at[j - 1], arc_at[j]
        # strand from position j-1 moves to j; from j moves to j-1
        if e > 0:
            over, under_in = a, b
            new = next_arc
            next_arc += 1
            crossings.append((over, under_in, new, e))
            arc_at[j - 1], arc_at[j] = new, over
        else:
            over, under_in = b, a
            new = next_arc
            next_arc += 1
            crossings.append((over, under_in, new, e))
            arc_at[j - 1], arc_at[j] = over, new
    parent = list(range(next_arc))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in range(s):
        parent[find(arc_at[p])] = find(p)
    labels = {}
    out = []
    for o, i, u, e in crossings:
        out.append(tuple(labels.setdefault(find(x), len(labels)) for x in (o, i, u)) + (e,))
    return out, len(labels)


def alexander_wirtinger(letters, s):
    """Alexander polynomial from the Fox-calculus matrix of the Wirtinger presentation."""
    crossings, arcs = wirtinger_arcs(letters, s)
    c = len(crossings)
    if c == 0:
        return LaurentPoly([1])
    assert arcs == c

    def matrix_at(t):
        M = [[0] * arcs for _ in range(c)]
        for r, (o, i, u, e) in enumerate(crossings):
            # Fox row of x_u = x_o^{+-1} x_i x_o^{-+1}; the two signs swap in and out
            if e < 0:
                i, u = u, i
            M[r][o] += 1 - t
            M[r][i] += t
            M[r][u] -= 1
        return [row[1:] for row in M[1:]]

    xs = list(range(2, 2 + c + 1))
    ys = [_int_det(matrix_at(x)) for x in xs]
    coeffs = _interpolate(xs, ys)
    p = LaurentPoly(coeffs)
    if p.span() % 2:
        raise AssertionError("odd span")
    p = p.shift(-(p.lo + p.hi) // 2)
    return -p if p(1) < 0 else p


def bracket_bruteforce(letters, s):
    """Kauffman bracket over all 2^c states; sigma_j (+1) is a negative crossing."""
    c = len(letters)
    total = {}
    for state in itertools.product((0, 1), repeat=c):
        # nodes (position, level), level 0..c with level c identified with 0
        parent = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            parent[find(a)] = find(b)

        for lvl, ((j, e), st) in enumerate(zip(letters, state)):
            top = (lvl + 1) % c
            for p in range(s):
                if p not in (j - 1, j):
                    union((p, lvl), (p, top))
            if st == 0:
                union((j - 1, lvl), (j - 1, top))
                union((j, lvl), (j, top))
            else:
                union((j - 1, lvl), (j, lvl))
                union((j - 1, top), (j, top))
        loops = len({find((p, lvl)) for p in range(s) for lvl in range(c)})
        # crossing sign -e; positive crossing: vertical smoothing gets A
        a_exp = 0
        for (j, e), st in zip(letters, state):
            vertical_is_A = (-e) > 0
            a_exp += (1 if vertical_is_A else -1) * (1 if st == 0 else -1)
        delta = LaurentPoly([-1, 0, 0, 0, -1], -2) ** (loops - 1)
        for k, v in delta.terms().items():
            total[a_exp + k] = total.get(a_exp + k, 0) + v
    return LaurentPoly.from_dict(total)


def signature_numeric(V):
    """Signature of V + V^T from floating point eigenvalues (small matrices only)."""
    if len(V) == 0:
        return 0
    A = np.array(V, dtype=float)
    w = np.linalg.eigvalsh(A + A.T)
    assert np.all(np.abs(w) > 1e-9)
    return int(np.sum(w > 0) - np.sum(w < 0))


def crossing_sign_trig(s, n, m, phi, k_a, k_b, b):
    """
    Sign of a crossing from the closed form
        -sign( sin(pi (m (t_b + t_a) + 2 phi)) * sin(pi m (t_b - t_a)) ),
    evaluated in high-precision floating point. g(x) is an increasing
    function of cos(2 pi x), so g(x) - g(y) has the sign of
    cos(2 pi x) - cos(2 pi y) = -2 sin(pi (x + y)) sin(pi (x - y)).
    t_a = (k_a + r_b)/(2n) moves outwards, t_b = (k_b - r_b)/(2n) inwards.
    """
    with mpmath.workdps(60):
        r = mpmath.tan(mpmath.pi * b / n) / mpmath.tan(mpmath.pi * s / n)
        ta = (k_a + r) / (2 * n)
        tb = (k_b - r) / (2 * n)
        u = mpmath.sin(mpmath.pi * (m * (ta + tb) + 2 * mpmath.mpf(phi.numerator) / phi.denominator))
        v = mpmath.sin(mpmath.pi * m * (tb - ta))
        x = -u * v
        assert abs(x) > mpmath.mpf(10) ** -40
        return 1 if x > 0 else -1


def segment_crossing_count(s, n):
    """All-pairs segment intersection count for the star polygon."""
    ang = 2 * np.pi * s * np.arange(n) / n
    P = np.column_stack([np.cos(ang), np.sin(ang)])
    segs = [(P[k], P[(k + 1) % n]) for k in range(n)]
    count = 0
    for i, j in itertools.combinations(range(n), 2):
        a, b = segs[i]
        c, d = segs[j]
        M = np.array([b - a, c - d]).T
        if abs(np.linalg.det(M)) < 1e-14:
            continue
        u, v = np.linalg.solve(M, c - a)
        if 1e-9 < u < 1 - 1e-9 and 1e-9 < v < 1 - 1e-9:
            count += 1
    return count


def torus_alexander_formula(p, q):
    """Alexander polynomial of the (p, q) torus knot from the closed formula."""
    # (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))
    num = LaurentPoly([-1] + [0] * (p * q - 1) + [1]) * LaurentPoly([-1, 1])
    den = LaurentPoly([-1] + [0] * (p - 1) + [1]) * LaurentPoly([-1] + [0] * (q - 1) + [1])
    r = num.divexact(den)
    return r.shift(-(r.lo + r.hi) // 2)


def alexander_unreduced_burau(letters, s):
    """
    Alexander polynomial from the unreduced Burau matrix evaluated at
    integer points: sigma_i acts by [[1-t, t], [1, 0]] on coordinates i, i+1.
    Delta(t) = det of (I - B) with the last row and column removed, up to
    units.
    """
    if s == 1:
        return LaurentPoly([1])

    def minor_at(t):
        B = [[Fraction(int(r == c)) for c in range(s)] for r in range(s)]
        g = [[1 - t, t], [1, 0]]
        ginv = [[0, 1], [Fraction(1, t), 1 - Fraction(1, t)]]
        for j, e in letters:
            i = j - 1
            G = g if e > 0 else ginv
            for row in B:
                a, b = row[i], row[i + 1]
                row[i], row[i + 1] = a * G[0][0] + b * G[1][0], a * G[0][1] + b * G[1][1]
        M = [[int(r == c) - B[r][c] for c in range(s - 1)] for r in range(s - 1)]
        return _frac_det(M)

    c = len(letters)
    xs = list(range(2, 2 + 2 * c + s + 2))
    # t^c * minor is a polynomial of degree at most 2c + s
    ys = [minor_at(x) * x**c for x in xs]
    num = LaurentPoly(_interpolate(xs, ys), -c)
    p = num.shift(-(num.lo + num.hi) // 2)
    return -p if p(1) < 0 else p


def _frac_det(M):
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = -det
        det *= M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            for j in range(k, n):
                M[i][j] -= f * M[k][j]
    return det
