"""Interior-intersection tests for the simplices ``P_alpha``.

Interiors are ambient interiors in ``R^{2m}``: a lower-dimensional simplex has
empty interior and fails every test.  Strict positivity of barycentric
coefficients is decided by maximizing a common slack ``t`` (strict iff
``t* > 0``), which also yields an exact witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import Infeasible
from .linalg import rank
from .lp import lp_max_slack
from .symbolic import sign_of

__all__ = [
    "affine_dimension",
    "RelintWitness",
    "relint_certificate",
    "relint_common_point",
    "verify_relint_witness",
    "check_sep",
    "check_lvm",
]


def affine_dimension(points):
    """Dimension of the affine hull of a nonempty point list."""
    if not points:
        raise ValueError("affine_dimension of an empty point set")
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


@dataclass
class RelintWitness:
    point: list
    coefficients: list  # one block of barycentric coefficients per simplex
    slack: object


def relint_certificate(simplices):
    """Solve the common-relative-interior program.

    Returns a :class:`RelintWitness` whose ``slack`` is the optimum ``t*``:
    relative interiors meet iff ``t* > 0``, hulls meet iff ``t* >= 0``.
    ``None`` means even the affine hulls are disjoint.
    """
    if not simplices:
        raise ValueError("need at least one simplex")
    dim = len(simplices[0][0])
    offsets, nvars = [], 0
    for s in simplices:
        offsets.append(nvars)
        nvars += len(s)
    rows, rhs = [], []
    for s, off in zip(simplices, offsets):
        row = [0] * nvars
        for k in range(len(s)):
            row[off + k] = 1
        rows.append(row)
        rhs.append(1)
    first, off0 = simplices[0], offsets[0]
    for s, off in zip(simplices[1:], offsets[1:]):
        for c in range(dim):
            row = [0] * nvars
            for k, p in enumerate(first):
                row[off0 + k] = p[c]
            for k, p in enumerate(s):
                row[off + k] = -p[c]
            rows.append(row)
            rhs.append(0)
    try:
        out = lp_max_slack(rows, rhs, range(nvars))
    except Infeasible:
        return None
    lam = out.witness
    blocks = [lam[off:off + len(s)] for s, off in zip(simplices, offsets)]
    point = [sum((b * p[c] for b, p in zip(blocks[0], first)), Fraction(0)) for c in range(dim)]
    return RelintWitness(point, blocks, out.optimal_slack)


def relint_common_point(simplices):
    """A point interior to every simplex (relative interiors), or ``None``."""
    cert = relint_certificate(simplices)
    if cert is None or sign_of(cert.slack) <= 0:
        return None
    return cert.point


def verify_relint_witness(simplices, witness):
    """Exact re-check: positive coefficients summing to one that hit the point."""
    if sign_of(witness.slack) <= 0:
        return False
    for s, block in zip(simplices, witness.coefficients):
        if any(sign_of(b) <= 0 for b in block):
            return False
        if sign_of(sum(block, Fraction(0)) - 1) != 0:
            return False
        for c, x in enumerate(witness.point):
            if sign_of(sum((b * p[c] for b, p in zip(block, s)), Fraction(0)) - x) != 0:
                return False
    return True


def check_sep(config):
    """Pairwise interior intersection of the ``P_alpha``.

    Returns ``(ok, detail)``; ``detail`` names the first degenerate simplex
    (``{"degenerate": alpha}``) or the first failing pair (``{"pair": (a, b)}``).
    """
    dim = config.dim
    for alpha in range(len(config.E)):
        if affine_dimension(config.simplex(alpha)) != dim:
            return False, {"degenerate": alpha}
    for a, b in combinations(range(len(config.E)), 2):
        if relint_common_point([config.simplex(a), config.simplex(b)]) is None:
            return False, {"pair": (a, b)}
    return True, None


def check_lvm(config):
    """Common interior point of all ``P_alpha``: returns ``(ok, point)``."""
    dim = config.dim
    if any(affine_dimension(config.simplex(a)) != dim for a in range(len(config.E))):
        return False, None
    point = relint_common_point([config.simplex(a) for a in range(len(config.E))])
    return point is not None, point
