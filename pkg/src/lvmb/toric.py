"""The quotient ``X = U / (C*)^{2m}`` as a simplicial fan, and back.

Rays of the fan are the Gale dual of the homogenized weights ``(lam_i, 1)``;
the maximal cone attached to ``E_alpha`` is spanned by the rays whose index
is *not* in ``E_alpha`` (the coordinates allowed to vanish on that chart).
Indices lying in every ``E_alpha`` never vanish on ``U`` and carry no ray.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd

from .combinatorics import Configuration, essential_intersection
from .errors import InconsistentDatum, NotComplete, NotSimplicial, RankDeficient
from .gitlift import Normalization, canonical_A, restrict_action
from .linalg import (
    determinant,
    rank,
    rat_solve,
    saturated_kernel,
    solve_left,
    transpose,
)
from .lp import lp_solve
from .symbolic import sign_of

__all__ = [
    "Fan",
    "FanDiagnostics",
    "primitive",
    "gale_dual",
    "build_fan",
    "check_simplicial",
    "check_complete",
    "check_projective",
    "diagnose",
    "realize_fan",
    "unimodular_equivalence",
]


def primitive(v):
    g = reduce(gcd, v, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(x // g for x in v)


@dataclass
class Fan:
    """Simplicial fan in ``Z^rank``.

    ``rays`` maps a label (the coordinate index it came from) to a primitive
    integer vector; ``max_cones`` lists label tuples.
    """

    rank: int
    rays: dict
    max_cones: list

    def __post_init__(self):
        self.rays = {int(k): tuple(int(x) for x in v) for k, v in dict(self.rays).items()}
        self.max_cones = [tuple(sorted(int(i) for i in c)) for c in self.max_cones]

    def vectors(self, cone):
        return [list(self.rays[i]) for i in cone]

    @property
    def labels(self):
        return sorted(self.rays)

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.rays == other.rays
            and sorted(self.max_cones) == sorted(other.max_cones)
        )


@dataclass
class FanDiagnostics:
    simplicial: bool
    complete: bool
    projective: bool
    support_function: dict = None
    failure_witness: object = None
    details: dict = field(default_factory=dict)


def gale_dual(lam):
    """Gale vectors ``v_i`` of the weights ``lam`` (one per row).

    The ``v_i`` are the columns of a Hermite-normal basis of the integer
    relations among the rows ``(lam_i, 1)``, so ``sum v_i == 0`` and
    ``sum lam_ij v_i == 0`` for every ``j``.
    """
    hom = [list(row) + [1] for row in lam]
    cols = len(hom[0])
    if rank(hom) != cols:
        raise RankDeficient(
            f"homogenized weight matrix has rank {rank(hom)} < {cols}"
        )
    kernel = saturated_kernel(hom)
    k = len(kernel)
    return [tuple(kernel[r][i] for r in range(k)) for i in range(len(lam))]


def build_fan(config, norm):
    """The fan of ``X`` from a datum and its (K) normalization."""
    v = gale_dual(norm.lam)
    k = config.n - 2 * config.m
    ghost = essential_intersection(config.E)
    rays = {}
    for i, vec in enumerate(v):
        if i in ghost:
            continue
        if not any(vec):
            raise InconsistentDatum(f"index {i} is outside some E_alpha but has zero Gale vector")
        rays[i] = primitive(vec)
    cones = [tuple(i for i in sorted(rays) if i not in set(s)) for s in config.E]
    return Fan(k, rays, cones)


def check_simplicial(fan):
    for cone in fan.max_cones:
        if len(cone) != fan.rank:
            return False
        if fan.rank and rank(fan.vectors(cone)) != fan.rank:
            return False
    return True


def _ridge_normal(fan, ridge):
    if fan.rank == 1:
        return [1]
    rows = fan.vectors(ridge)
    basis = saturated_kernel(transpose(rows))
    return basis[0]


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _improper_pair(fan, s, t):
    """Whether ``cone(s) & cone(t)`` is bigger than ``cone(s & t)``."""
    only_s = [i for i in s if i not in t]
    if not only_s:
        return False
    k = fan.rank
    nv = len(s) + len(t)
    a = []
    for c in range(k):
        a.append([fan.rays[i][c] for i in s] + [-fan.rays[j][c] for j in t])
    a.append([int(i in only_s) for i in s] + [0] * len(t))
    b = [0] * k + [1]
    return lp_solve(a, b, [0] * nv).status == "optimal"


def _cone_coords(fan, cone, point):
    return rat_solve(transpose(fan.vectors(cone)), point)


def _generic_point_count(fan):
    """Number of maximal cones containing a perturbed first ray."""
    first = fan.rays[fan.labels[0]]
    eps = Fraction(1, 1009)
    for _ in range(8):
        point = [Fraction(x) + eps ** (j + 1) for j, x in enumerate(first)]
        coords = [_cone_coords(fan, c, point) for c in fan.max_cones]
        containing = [c for c in coords if all(x >= 0 for x in c)]
        if all(all(x > 0 for x in c) for c in containing):
            return len(containing), point
        eps /= 7
    return len(containing), point


def check_complete(fan):
    """Whether the cones cover ``R^rank``; returns ``(ok, witness)``.

    For a simplicial fan with full-dimensional, properly intersecting cones,
    every ridge bordering exactly two cones from opposite sides forces the
    support to be a closed set without boundary, i.e. everything.  A generic
    point is additionally required to lie in exactly one cone.
    """
    if not check_simplicial(fan):
        return False, {"reason": "not simplicial"}
    k = fan.rank
    if k == 0:
        return bool(fan.max_cones), None
    if not fan.max_cones:
        return False, {"reason": "no cones"}
    if len(set(fan.max_cones)) != len(fan.max_cones):
        return False, {"reason": "duplicate cone"}

    ridges = {}
    for ci, cone in enumerate(fan.max_cones):
        for other in cone:
            ridge = tuple(i for i in cone if i != other)
            ridges.setdefault(ridge, []).append((ci, other))
    for ridge, sides in ridges.items():
        if len(sides) != 2:
            return False, {"reason": "ridge", "ridge": ridge, "cones": [c for c, _ in sides]}
        u = _ridge_normal(fan, ridge)
        s0 = _dot(u, fan.rays[sides[0][1]])
        s1 = _dot(u, fan.rays[sides[1][1]])
        if s0 * s1 >= 0:
            return False, {"reason": "ridge side", "ridge": ridge}

    for (i, s), (j, t) in combinations(enumerate(fan.max_cones), 2):
        if _improper_pair(fan, s, t) or _improper_pair(fan, t, s):
            return False, {"reason": "improper intersection", "cones": (i, j)}

    count, point = _generic_point_count(fan)
    if count != 1:
        return False, {"reason": "generic point", "point": point, "count": count}
    return True, None


def check_projective(fan):
    """Existence of a strictly convex piecewise-linear support function.

    Returns ``(ok, h)`` with ``h`` the optimal ray values.  The function is
    pinned to zero on the first cone and bounded in ``[-1, 1]``; the program
    maximizes the minimal convexity gap ``t`` and the fan is projective iff
    ``t* > 0``.
    """
    labels = fan.labels
    if fan.rank == 0:
        return True, {}
    pos = {lab: p for p, lab in enumerate(labels)}
    R = len(labels)
    # columns: y_i = h_i + 1 (R), u_i bound slacks (R), t+, t-, w, then gap slacks
    gaps = []
    for cone in fan.max_cones:
        basis = fan.vectors(cone)
        for lab in labels:
            if lab in cone:
                continue
            c = solve_left(basis, list(fan.rays[lab]))
            gaps.append((cone, lab, c))
    tp = 2 * R
    tn, w = tp + 1, tp + 2
    base = 2 * R + 3
    ncols = base + len(gaps)
    a, b = [], []
    for g, (cone, lab, c) in enumerate(gaps):
        row = [Fraction(0)] * ncols
        for coef, j in zip(c, cone):
            row[pos[j]] += coef
        row[pos[lab]] -= 1
        row[tp], row[tn], row[base + g] = Fraction(1), Fraction(-1), Fraction(1)
        a.append(row)
        b.append(sum(c, Fraction(0)) - 1)
    for i in range(R):
        row = [Fraction(0)] * ncols
        row[i], row[R + i] = Fraction(1), Fraction(1)
        a.append(row)
        b.append(Fraction(2))
    for lab in fan.max_cones[0]:
        row = [Fraction(0)] * ncols
        row[pos[lab]] = Fraction(1)
        a.append(row)
        b.append(Fraction(1))
    row = [Fraction(0)] * ncols
    row[tp], row[tn], row[w] = Fraction(1), Fraction(-1), Fraction(1)
    a.append(row)
    b.append(Fraction(1))
    obj = [Fraction(0)] * ncols
    obj[tp], obj[tn] = Fraction(1), Fraction(-1)
    res = lp_solve(a, b, obj)
    if res.status != "optimal":  # pragma: no cover - h = 0, t = -1 is always feasible
        raise RuntimeError(f"support-function program is {res.status}")
    h = {lab: res.x[pos[lab]] - 1 for lab in labels}
    return sign_of(res.value) > 0, h


def diagnose(fan):
    simplicial = check_simplicial(fan)
    complete, witness = check_complete(fan) if simplicial else (False, {"reason": "not simplicial"})
    projective, h = check_projective(fan) if complete else (False, None)
    return FanDiagnostics(
        simplicial=simplicial,
        complete=complete,
        projective=projective,
        support_function=h if projective else None,
        failure_witness=witness,
    )


def realize_fan(fan):
    """An LVMB datum whose quotient ``X`` has the given fan.

    Coordinates: index 0 is the affine chart slot ``[1 : z_1 : ... ]`` with
    weight 0, indices ``1..R`` follow the rays in label order, and phantom
    coordinates (unit weights, in every ``E_alpha``) come last; they make the
    torus rank even and at least 2.
    """
    if not check_simplicial(fan):
        raise NotSimplicial("fan is not simplicial")
    ok, witness = check_complete(fan)
    if not ok:
        raise NotComplete(f"fan is not complete: {witness}")
    labels = fan.labels
    R, k = len(labels), fan.rank
    V = [list(fan.rays[lab]) for lab in labels]
    weights = saturated_kernel(V) if V else []
    r = len(weights)
    if r != R - k:
        raise RankDeficient("rays do not span the ambient lattice")
    phantoms = 2 if r == 0 else r % 2
    two_m = r + phantoms
    m = two_m // 2
    lam = [[0] * two_m]
    for i in range(R):
        lam.append([weights[row][i] for row in range(r)] + [0] * phantoms)
    for p in range(phantoms):
        lam.append([int(j == r + p) for j in range(two_m)])
    n = R + phantoms
    pos = {lab: p for p, lab in enumerate(labels)}
    fixed = [0] + list(range(R + 1, n + 1))
    E = []
    for cone in fan.max_cones:
        inside = {pos[lab] for lab in cone}
        E.append(tuple(sorted(fixed + [i + 1 for i in range(R) if i not in inside])))
    E.sort()
    re_a, im_a = canonical_A(m)
    L = restrict_action(lam, re_a, im_a)
    config = Configuration(m, n, L, E)
    M = [[Fraction(int(i == j)) for j in range(two_m)] for i in range(two_m)]
    return config, Normalization(lam, M, [Fraction(0)] * two_m)


def unimodular_equivalence(src, dst, label_map):
    """Matrix ``G`` in ``GL(k, Z)`` with ``src.rays[a] @ G == dst.rays[label_map[a]]``.

    Also requires the cones to correspond under ``label_map``.  Returns
    ``None`` when no such matrix exists.
    """
    if src.rank != dst.rank or set(label_map) != set(src.rays):
        return None
    mapped = sorted(tuple(sorted(label_map[i] for i in c)) for c in src.max_cones)
    if mapped != sorted(dst.max_cones):
        return None
    k = src.rank
    if k == 0:
        return []
    base = src.max_cones[0]
    S = src.vectors(base)
    T = [list(dst.rays[label_map[i]]) for i in base]
    # G = S^{-1} T, column by column
    cols = [rat_solve(S, [row[j] for row in T]) for j in range(k)]
    G = [[cols[j][i] for j in range(k)] for i in range(k)]
    if any(x.denominator != 1 for row in G for x in row):
        return None
    G = [[int(x) for x in row] for row in G]
    if abs(determinant(G)) != 1:
        return None
    for lab, vec in src.rays.items():
        img = [sum(vec[i] * G[i][j] for i in range(k)) for j in range(k)]
        if tuple(img) != dst.rays[label_map[lab]]:
            return None
    return G
