"""Exact dense linear algebra on nested lists.

Integer routines (Smith and Hermite normal forms, saturated kernels) work on
Python ints.  Field routines (rank, solve, determinant) accept any mix of
``Fraction`` and :class:`~lvmb.symbolic.SymbolicReal` entries; every pivot is
certified nonzero through :func:`~lvmb.symbolic.sign_of`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularMatrix
from .symbolic import SymbolicReal, sign_of

__all__ = [
    "identity",
    "transpose",
    "matmul",
    "matvec",
    "vecmat",
    "determinant",
    "int_determinant",
    "smith_normal_form",
    "hermite_normal_form",
    "saturated_kernel",
    "rank",
    "row_echelon",
    "rat_solve",
    "solve_left",
    "is_unimodular",
]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m, cols=None):
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((row[k] * b[k][j] for k in range(inner)), 0) for j in range(cols)]
            for row in a]


def matvec(a, x):
    return [sum((r * v for r, v in zip(row, x)), 0) for row in a]


def vecmat(x, a):
    cols = len(a[0]) if a else 0
    return [sum((x[i] * a[i][j] for i in range(len(a))), 0) for j in range(cols)]


def _nonzero(x):
    # certified: safe to divide by
    return sign_of(x) != 0


def _formally_nonzero(x):
    # eliminating a formally nonzero entry is harmless even if it vanishes
    return not x.is_zero if isinstance(x, SymbolicReal) else x != 0


# ---------------------------------------------------------------------------
# integer lattice routines


def smith_normal_form(m):
    """Return ``(U, S, V)`` with ``U @ m @ V == S`` and ``U``, ``V`` unimodular.

    ``S`` is diagonal with nonnegative entries, each dividing the next.
    Pivots are chosen by minimal absolute value.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    s = [[int(x) for x in row] for row in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        s[dst] = [a + q * b for a, b in zip(s[dst], s[src])]
        u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in s:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if s[i][j] and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return u, s, v
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = s[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // p))
                    dirty = dirty or s[i][t] != 0
            for j in range(t + 1, cols):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // p))
                    dirty = dirty or s[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if s[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return u, s, v


def hermite_normal_form(m):
    """Row-style Hermite normal form of an integer matrix.

    Returns ``(H, P)`` where ``H = P @ m`` is in row echelon form with positive
    pivots, entries above each pivot reduced into ``[0, pivot)``, zero rows at
    the bottom, and ``P`` unimodular.
    """
    h = [[int(x) for x in row] for row in m]
    rows = len(h)
    cols = len(h[0]) if rows else 0
    p = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if h[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[piv] = h[piv], h[r]
            p[r], p[piv] = p[piv], p[r]
            done = True
            for i in range(r + 1, rows):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                    p[i] = [a - q * b for a, b in zip(p[i], p[r])]
                    done = done and h[i][c] == 0
            if done:
                break
        if r < rows and h[r][c]:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                p[r] = [-x for x in p[r]]
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                    p[i] = [a - q * b for a, b in zip(p[i], p[r])]
            r += 1
    return h, p


def saturated_kernel(m):
    """Basis rows of the saturated lattice ``{x in Z^r : x^T m = 0}``.

    ``m`` is ``r x c``.  The basis is returned in Hermite normal form, so it
    is canonical for the lattice.
    """
    r = len(m)
    if r == 0:
        return []
    u, s, _ = smith_normal_form(m)
    rk = sum(1 for i in range(min(r, len(s[0]) if s else 0)) if s[i][i])
    basis = [row[:] for row in u[rk:]]
    if not basis:
        return []
    h, _ = hermite_normal_form(basis)
    return [row for row in h if any(row)]


def int_determinant(m):
    return int(determinant(m))


def is_unimodular(m):
    if not m:
        return True
    return len(m) == len(m[0]) and abs(int_determinant(m)) == 1


# ---------------------------------------------------------------------------
# field routines


def row_echelon(m):
    """Gaussian elimination over the exact field.

    Returns ``(R, pivots)``: the reduced row echelon form and the pivot
    column of each nonzero row.
    """
    a = [[x if not isinstance(x, int) else Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if _nonzero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and _formally_nonzero(a[i][c]):
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m):
    return len(row_echelon(m)[1])


def determinant(m):
    n = len(m)
    a = [[x if not isinstance(x, int) else Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if _nonzero(a[i][c])), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if _formally_nonzero(a[i][c]):
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def rat_solve(a, b):
    """Unique solution ``x`` of ``a @ x == b`` for square invertible ``a``."""
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ValueError("rat_solve needs a square system")
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = row_echelon(aug)
    if len(pivots) < n or pivots[-1] >= n:
        raise SingularMatrix("matrix is not invertible")
    return [red[i][n] for i in range(n)]


def solve_left(basis, v):
    """Coefficients ``c`` with ``c @ basis == v`` for linearly independent rows.

    Returns ``None`` when ``v`` is not in the row span.
    """
    k = len(basis)
    if k == 0:
        return [] if all(not _nonzero(x) for x in v) else None
    aug = [list(col) + [rhs] for col, rhs in zip(zip(*basis), v)]
    red, pivots = row_echelon(aug)
    if pivots and pivots[-1] == k:
        return None
    if len(pivots) < k:
        raise SingularMatrix("basis rows are linearly dependent")
    return [red[i][k] for i in range(k)]
