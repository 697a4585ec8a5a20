"""Condition (K) and the lift of the ``C^m``-action to an algebraic torus.

A datum satisfies (K) when a real affine automorphism of ``R^{2m}`` sends
every ``l_i`` to an integer vector.  Affine maps preserve affine coordinates,
so this holds iff every ``l_i`` has rational affine coordinates with respect
to a maximal affinely independent subset ``B``; the map then sends ``B`` to
scaled standard lattice points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .linalg import rank, solve_left
from .symbolic import is_rational, sign_of, to_fraction

__all__ = [
    "Normalization",
    "check_condition_K",
    "verify_normalization",
    "canonical_A",
    "cocompact_closed",
    "restrict_action",
]


@dataclass
class Normalization:
    """Witness for (K): ``(Re l_i, Im l_i) == lam[i] @ M + b`` for all ``i``.

    ``re_A`` and ``im_A`` are the ``2m x m`` halves of the complex matrix
    ``A`` with ``(Re A | Im A) == M``, so that ``l_i = lam[i] @ A`` up to the
    translation ``b``.
    """

    lam: list
    M: list
    b: list

    @property
    def m(self):
        return len(self.M) // 2

    @property
    def re_A(self):
        return [row[: self.m] for row in self.M]

    @property
    def im_A(self):
        return [row[self.m:] for row in self.M]


def _affine_basis(points):
    """Greedy maximal affinely independent subset, by index."""
    basis = [0]
    diffs = []
    for i in range(1, len(points)):
        d = [a - b for a, b in zip(points[i], points[0])]
        if rank(diffs + [d]) > len(diffs):
            basis.append(i)
            diffs.append(d)
    return basis, diffs


def _reduce_columns(lam, M):
    # divide each column of lam by its content, compensating in M's rows
    cols = len(M)
    for j in range(cols):
        g = 0
        for row in lam:
            g = gcd(g, row[j])
        if g > 1:
            for row in lam:
                row[j] //= g
            M[j] = [x * g for x in M[j]]
    return lam, M


def check_condition_K(config):
    """A :class:`Normalization` when (K) holds, else ``None``."""
    points = config.L
    dim = config.dim
    if all(is_rational(x) for p in points for x in p):
        pts = [[to_fraction(x) for x in p] for p in points]
        if all(x.denominator == 1 for p in pts for x in p):
            lam = [[int(x) for x in p] for p in pts]
            M = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
            return Normalization(lam, M, [Fraction(0)] * dim)
        b = list(pts[0])
        diffs = [[x - y for x, y in zip(p, b)] for p in pts]
        D = lcm(*(x.denominator for p in diffs for x in p))
        lam = [[int(x * D) for x in p] for p in diffs]
        M = [[Fraction(int(i == j), D) for j in range(dim)] for i in range(dim)]
        lam, M = _reduce_columns(lam, M)
        return Normalization(lam, M, b)

    basis, drows = _affine_basis(points)
    r = len(drows)
    base = points[basis[0]]
    coords = []
    for p in points:
        c = solve_left(drows, [a - b for a, b in zip(p, base)])
        if c is None or not all(is_rational(x) for x in c):
            return None
        coords.append([to_fraction(x) for x in c])
    D = lcm(1, *(x.denominator for c in coords for x in c))
    lam = [[int(x * D) for x in c] + [0] * (dim - r) for c in coords]
    M = [[x / D for x in row] for row in drows]
    # complete the row space with standard unit vectors
    for j in range(dim):
        if len(M) == dim:
            break
        e = [Fraction(int(k == j)) for k in range(dim)]
        if rank(M + [e]) > len(M):
            M.append(e)
    lam, M = _reduce_columns(lam, M)
    return Normalization(lam, M, list(base))


def verify_normalization(config, norm):
    """Exact check that ``norm`` witnesses (K) for ``config``."""
    dim = config.dim
    if len(norm.M) != dim or rank(norm.M) != dim or len(norm.lam) != len(config.L):
        return False
    for p, lam in zip(config.L, norm.lam):
        if not all(isinstance(v, int) for v in lam):
            return False
        for c in range(dim):
            val = sum((lam[k] * norm.M[k][c] for k in range(dim)), Fraction(0)) + norm.b[c]
            if sign_of(val - p[c]) != 0:
                return False
    return True


def canonical_A(m):
    """``(Re A, Im A)`` with ``Re A = [I; 0]`` and ``Im A = [0; I]``."""
    re = [[Fraction(int(i == j)) for j in range(m)] for i in range(2 * m)]
    im = [[Fraction(int(i == j + m)) for j in range(m)] for i in range(2 * m)]
    return re, im


def _complex_rank_is_full(re_a, im_a):
    m = len(re_a[0]) if re_a else 0
    # realification [[Re, -Im], [Im, Re]] has twice the complex rank
    top = [list(r) + [-x for x in i] for r, i in zip(re_a, im_a)]
    bottom = [list(i) + list(r) for r, i in zip(re_a, im_a)]
    return rank(top + bottom) == 2 * m


def cocompact_closed(re_a, im_a):
    """Whether ``exp(A C^m)`` is closed (hence cocompact) in ``(C*)^{2m}``.

    ``A`` is ``2m x m`` with full complex column rank; the answer is whether
    the real ``2m x 2m`` matrix ``(Re A | Im A)`` is invertible.
    """
    rows = len(re_a)
    m = len(re_a[0]) if re_a else 0
    if rows != 2 * m or len(im_a) != rows:
        raise ValueError("A must be a 2m x m matrix")
    if not _complex_rank_is_full(re_a, im_a):
        raise ValueError("A does not have full complex column rank")
    block = [list(r) + list(i) for r, i in zip(re_a, im_a)]
    return rank(block) == rows


def restrict_action(lam, re_a, im_a):
    """Forms ``l_i = lam_i A`` of the restricted action, as ``(Re, Im)`` points."""
    if not cocompact_closed(re_a, im_a):
        raise ValueError("A does not span a closed cocompact subgroup")
    m = len(re_a[0])
    out = []
    for row in lam:
        re = [sum((row[k] * re_a[k][j] for k in range(2 * m)), Fraction(0)) for j in range(m)]
        im = [sum((row[k] * im_a[k][j] for k in range(2 * m)), Fraction(0)) for j in range(m)]
        out.append(tuple(re + im))
    return out
