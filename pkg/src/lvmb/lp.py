"""Exact two-phase simplex method over an ordered field.

Entries may be ``Fraction`` or :class:`~lvmb.symbolic.SymbolicReal`.  Pivoting
follows Bland's rule (smallest eligible index enters, ties on the ratio test
leave by smallest basic index), which guarantees termination and makes every
result deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from gmpy2 import mpq

from .errors import Infeasible
from .symbolic import SymbolicReal, sign_of

__all__ = ["LpResult", "LpOutcome", "lp_solve", "lp_max_slack", "UnboundedLP"]


class UnboundedLP(Exception):
    pass


@dataclass
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: object = None
    x: list = field(default_factory=list)


@dataclass
class LpOutcome:
    """Optimum of a max-slack program.

    ``optimal_slack`` is ``t*``; the system is strictly feasible iff ``t* > 0``.
    ``witness`` assigns every original variable.
    """

    optimal_slack: object
    witness: list

    @property
    def strictly_feasible(self):
        return sign_of(self.optimal_slack) > 0


def _zero(x):
    return x.is_zero if isinstance(x, SymbolicReal) else x == 0


def _pivot(rows, rhs, obj, r, c):
    prow = rows[r]
    inv = 1 / prow[c]
    prow = [v * inv for v in prow]
    rows[r] = prow
    rhs[r] = rhs[r] * inv
    for i, row in enumerate(rows):
        if i != r and not _zero(row[c]):
            f = row[c]
            rows[i] = [a - f * b for a, b in zip(row, prow)]
            rhs[i] = rhs[i] - f * rhs[r]
    if not _zero(obj[0][c]):
        f = obj[0][c]
        obj[0] = [a - f * b for a, b in zip(obj[0], prow)]
        obj[1] = obj[1] - f * rhs[r]


def _simplex(rows, rhs, obj, basis, allowed):
    """Maximize over the current feasible basis.

    ``obj = [reduced_costs, minus_current_value]``; a column is eligible to enter when its
    reduced cost is positive.  Only columns in ``allowed`` may enter.
    """
    while True:
        enter = next((j for j in allowed if sign_of(obj[0][j]) > 0), None)
        if enter is None:
            return
        best = None
        for i, row in enumerate(rows):
            if sign_of(row[enter]) > 0:
                ratio = rhs[i] / row[enter]
                if best is None:
                    best = (ratio, basis[i], i)
                else:
                    s = sign_of(ratio - best[0])
                    if s < 0 or (s == 0 and basis[i] < best[1]):
                        best = (ratio, basis[i], i)
        if best is None:
            raise UnboundedLP()
        leave = best[2]
        _pivot(rows, rhs, obj, leave, enter)
        basis[leave] = enter


def _to_fraction(v):
    if isinstance(v, SymbolicReal):
        return v
    return Fraction(int(v.numerator), int(v.denominator))


def lp_solve(a, b, c):
    """Maximize ``c @ x`` subject to ``a @ x == b`` and ``x >= 0``.

    Purely rational programs run on ``gmpy2.mpq``; results are returned as
    ``Fraction`` (or :class:`SymbolicReal`) values.
    """
    m = len(a)
    n = len(c)
    symbolic = any(
        isinstance(v, SymbolicReal) for v in (*(x for row in a for x in row), *b, *c)
    )
    if symbolic:
        def conv(v):
            return Fraction(v) if isinstance(v, int) else v
    else:
        def conv(v):
            return mpq(v.numerator, v.denominator)
    zero = conv(0)
    one = conv(1)
    rows, rhs = [], []
    for i, (row, bi) in enumerate(zip(a, b)):
        row = [conv(v) for v in row]
        bi = conv(bi)
        if sign_of(bi) < 0:
            row = [-v for v in row]
            bi = -bi
        rows.append(row + [one if i == k else zero for k in range(m)])
        rhs.append(bi)
    basis = [n + i for i in range(m)]

    # phase 1: maximize -(sum of artificials)
    red = [zero] * (n + m)
    val = zero
    for row, bi in zip(rows, rhs):
        for j in range(n):
            red[j] = red[j] + row[j]
        val = val + bi
    # obj[1] holds minus the current objective value
    obj = [red, val]
    _simplex(rows, rhs, obj, basis, range(n))
    if sign_of(obj[1]) != 0:
        return LpResult("infeasible")

    # drive artificial variables out of the basis; drop redundant rows
    i = 0
    while i < len(rows):
        if basis[i] >= n:
            j = next((j for j in range(n) if not _zero(rows[i][j])), None)
            if j is None:
                del rows[i], rhs[i], basis[i]
                continue
            _pivot(rows, rhs, obj, i, j)
            basis[i] = j
        i += 1
    rows = [row[:n] for row in rows]

    # phase 2
    cvec = [conv(v) for v in c]
    red = list(cvec)
    val = zero
    for row, bi, bj in zip(rows, rhs, basis):
        cb = cvec[bj]
        if not _zero(cb):
            red = [r - cb * v for r, v in zip(red, row)]
            val = val + cb * bi
    obj = [red, -val]
    try:
        _simplex(rows, rhs, obj, basis, range(n))
    except UnboundedLP:
        return LpResult("unbounded")
    x = [zero] * n
    for bi, bj in zip(rhs, basis):
        x[bj] = bi
    value = sum((ci * xi for ci, xi in zip(cvec, x)), zero)
    return LpResult("optimal", _to_fraction(value), [_to_fraction(v) for v in x])


def lp_max_slack(equalities, rhs, nonneg_vars, cap=1):
    """Maximize ``t`` subject to ``equalities @ x == rhs`` and ``x_j >= t``.

    Variables outside ``nonneg_vars`` are free.  The slack is capped at
    ``t <= cap`` so the program is always bounded; a strict-feasibility
    verdict only depends on the sign of ``t*``.

    Raises :class:`~lvmb.errors.Infeasible` when the equalities alone have
    no solution.
    """
    nvars = len(equalities[0]) if equalities else 0
    nonneg = sorted(set(nonneg_vars))
    free = [j for j in range(nvars) if j not in set(nonneg)]
    # columns: s_j (nonneg), p_j, q_j (free), t+, t-, w
    col_s = {j: k for k, j in enumerate(nonneg)}
    off_p = len(nonneg)
    col_p = {j: off_p + 2 * k for k, j in enumerate(free)}
    tp = off_p + 2 * len(free)
    tn, w = tp + 1, tp + 2
    ncols = tp + 3
    a, b = [], []
    for row, bi in zip(equalities, rhs):
        new = [0] * ncols
        tsum = 0
        for j, v in enumerate(row):
            if j in col_s:
                new[col_s[j]] = v
                tsum = tsum + v
            else:
                new[col_p[j]] = v
                new[col_p[j] + 1] = -v
        new[tp] = tsum
        new[tn] = -tsum
        a.append(new)
        b.append(bi)
    cap_row = [0] * ncols
    cap_row[tp], cap_row[tn], cap_row[w] = 1, -1, 1
    a.append(cap_row)
    b.append(cap)
    c = [0] * ncols
    c[tp], c[tn] = 1, -1
    res = lp_solve(a, b, c)
    if res.status == "infeasible":
        raise Infeasible("equality system has no solution")
    if res.status != "optimal":  # pragma: no cover - t is capped
        raise RuntimeError("slack program unexpectedly unbounded")
    x = res.x
    t = x[tp] - x[tn]
    witness = []
    for j in range(nvars):
        if j in col_s:
            witness.append(x[col_s[j]] + t)
        else:
            witness.append(x[col_p[j]] - x[col_p[j] + 1])
    return LpOutcome(t, witness)
