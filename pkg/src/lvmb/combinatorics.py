"""The LVMB datum and the purely combinatorial questions about it."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .symbolic import RATIONAL_TABLE, GeneratorTable, as_scalar

__all__ = [
    "Configuration",
    "validate",
    "check_comp",
    "essential_intersection",
    "min_transversal",
    "restrict",
    "minimal_standard_submanifolds",
]


@dataclass(eq=False)
class Configuration:
    """An LVMB datum ``(L, E, m, n)``.

    ``L`` holds ``n + 1`` points of ``R^{2m}``, point ``i`` being
    ``(Re l_i, Im l_i)``.  ``E`` is the ordered family of index sets, each
    stored as a sorted tuple.
    """

    m: int
    n: int
    L: tuple
    E: tuple
    table: GeneratorTable = field(default=RATIONAL_TABLE)

    def __post_init__(self):
        self.L = tuple(tuple(as_scalar(x) for x in point) for point in self.L)
        self.E = tuple(tuple(sorted(int(i) for i in s)) for s in self.E)

    @classmethod
    def from_complex(cls, m, n, forms, E, table=RATIONAL_TABLE):
        """Build from complex forms given as ``m``-tuples of ``(re, im)`` pairs."""
        L = [tuple(re for re, _ in form) + tuple(im for _, im in form) for form in forms]
        return cls(m, n, L, E, table)

    @property
    def dim(self):
        return 2 * self.m

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return (
            (self.m, self.n, self.E, self.table) == (other.m, other.n, other.E, other.table)
            and len(self.L) == len(other.L)
            and all(
                len(p) == len(q) and all(a == b for a, b in zip(p, q))
                for p, q in zip(self.L, other.L)
            )
        )

    def simplex(self, alpha):
        """Vertices of ``P_alpha`` in index order."""
        return [self.L[i] for i in self.E[alpha]]

    def has_distinct_forms(self):
        seen = []
        for p in self.L:
            if any(all(a == b for a, b in zip(p, q)) for q in seen):
                return False
            seen.append(p)
        return True


def validate(config):
    """List of violated structural invariants (empty when the datum is well formed)."""
    out = []
    m, n = config.m, config.n
    if not isinstance(m, int) or m < 1:
        out.append("m must be a positive integer")
        return out
    if n < 2 * m:
        out.append(f"n < 2m (n={n}, m={m})")
    if len(config.L) != n + 1:
        out.append(f"L has {len(config.L)} points, expected n+1={n + 1}")
    for i, p in enumerate(config.L):
        if len(p) != 2 * m:
            out.append(f"L[{i}] has {len(p)} coordinates, expected 2m={2 * m}")
    if not config.E:
        out.append("E is empty")
    seen = set()
    for a, s in enumerate(config.E):
        if len(set(s)) != len(s):
            out.append(f"E[{a}] has a repeated index")
        if len(s) != 2 * m + 1:
            out.append(f"E[{a}] cardinality {len(s)} != 2m+1={2 * m + 1}")
        bad = [i for i in s if not 0 <= i <= n]
        if bad:
            out.append(f"E[{a}] has indices outside [0, n]: {bad}")
        if s in seen:
            out.append(f"E[{a}] duplicates an earlier set")
        seen.add(s)
    for i, p in enumerate(config.L):
        for x in p:
            table = getattr(x, "table", None)
            if table is not None and table != config.table:
                out.append(f"L[{i}] uses a foreign generator table")
                break
    return out


def check_comp(config):
    """The exchange condition: returns ``(ok, counterexample)``.

    ``counterexample`` is the first ``(alpha, i)`` for which no ``j`` in
    ``E[alpha]`` makes ``E[alpha] - {j} + {i}`` a member of ``E``.
    """
    members = {frozenset(s) for s in config.E}
    for alpha, s in enumerate(config.E):
        fs = frozenset(s)
        for i in range(config.n + 1):
            if i in fs:
                continue
            if not any((fs - {j}) | {i} in members for j in s):
                return False, (alpha, i)
    return True, None


def essential_intersection(E):
    """``set.intersection`` of the family; its size is ``k'``."""
    sets = [set(s) for s in E]
    out = sets[0]
    for s in sets[1:]:
        out &= s
    return frozenset(out)


def min_transversal(E, n):
    """Minimum size ``d`` of a subset of ``{0..n}`` meeting every set of ``E``.

    The complement of ``U`` in ``P^n`` is the union of the coordinate
    subspaces ``{x_i = 0 : i in S}`` over such hitting sets ``S``, so ``d`` is
    its minimal codimension.  Exhaustive search by increasing size.
    """
    masks = [sum(1 << i for i in s) for s in E]
    for size in range(1, n + 2):
        for combo in combinations(range(n + 1), size):
            hit = sum(1 << i for i in combo)
            if all(mask & hit for mask in masks):
                return size
    raise ValueError("empty set in family")


def restrict(config, survivors):
    """Datum on the coordinates in ``survivors`` (the others set to zero).

    Returns ``None`` when no set of ``E`` survives or ``|S| - 1 < 2m``.  The
    result is not checked for (sep) or (comp).
    """
    keep = sorted(set(survivors))
    if keep == list(range(config.n + 1)):
        return config
    n_new = len(keep) - 1
    if n_new < 2 * config.m:
        return None
    where = {old: new for new, old in enumerate(keep)}
    E_new = [tuple(where[i] for i in s) for s in config.E if all(i in where for i in s)]
    if not E_new:
        return None
    return Configuration(
        config.m, n_new, [config.L[i] for i in keep], E_new, config.table
    )


def minimal_standard_submanifolds(config):
    """One ``(E_alpha, restricted datum)`` pair per member of ``E``.

    Each restriction has ``n' = 2m`` and a single index set: the minimal
    standard submanifolds, which are compact complex ``m``-tori.
    """
    return [(s, restrict(config, s)) for s in config.E]
