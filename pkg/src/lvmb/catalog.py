"""Built-in data: the hexagon example and a few standard fans."""

from __future__ import annotations

from .combinatorics import Configuration
from .symbolic import GeneratorTable
from .toric import Fan

__all__ = [
    "HEXAGON",
    "HEXAGON_FAMILY",
    "emit_example",
    "hopf_datum",
    "sqrt2_datum",
    "fan_P1",
    "fan_P2",
    "fan_P1xP1",
    "fan_P3",
    "fan_octahedron",
    "fan_hirzebruch",
    "named_fans",
]

# lattice hexagon l_0..l_5, counterclockwise
HEXAGON = ((1, 0), (3, 0), (4, 1), (3, 3), (1, 3), (0, 1))
HEXAGON_FAMILY = (
    (0, 2, 4), (1, 3, 5), (0, 2, 5), (1, 2, 4),
    (0, 3, 4), (0, 3, 5), (1, 3, 4), (1, 2, 5),
)


def emit_example():
    """``m = 1``, ``n = 5``: six hexagon vertices and eight triangles.

    The triangles pair up the opposite vertices ``{0,1}``, ``{2,3}``,
    ``{4,5}`` like the faces of an octahedron.  The datum is LVMB but not LVM.
    """
    return Configuration(1, 5, HEXAGON, HEXAGON_FAMILY)


def hopf_datum():
    """``l = (0, 1, 1, i)`` with ``E = {013, 023}``: a Hopf surface over ``P^1``."""
    return Configuration(1, 3, [(0, 0), (1, 0), (1, 0), (0, 1)], [(0, 1, 3), (0, 2, 3)])


def sqrt2_datum():
    """``l = (0, 1, i, sqrt2 (1 + i))``; violates (K)."""
    table = GeneratorTable.with_sqrt(2)
    s = table.gen(1)
    return Configuration(1, 3, [(0, 0), (1, 0), (0, 1), (s, s)], [(0, 1, 2)], table)


def fan_P1():
    return Fan(1, {0: (1,), 1: (-1,)}, [(0,), (1,)])


def fan_P2():
    return Fan(2, {0: (1, 0), 1: (0, 1), 2: (-1, -1)}, [(0, 1), (1, 2), (0, 2)])


def fan_P1xP1():
    rays = {0: (1, 0), 1: (0, 1), 2: (-1, 0), 3: (0, -1)}
    return Fan(2, rays, [(0, 1), (1, 2), (2, 3), (0, 3)])


def fan_P3():
    rays = {0: (1, 0, 0), 1: (0, 1, 0), 2: (0, 0, 1), 3: (-1, -1, -1)}
    cones = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return Fan(3, rays, cones)


def fan_octahedron():
    """Face fan of the cross-polytope: rays ``+-e_i``, eight orthants."""
    rays = {0: (1, 0, 0), 1: (-1, 0, 0), 2: (0, 1, 0), 3: (0, -1, 0), 4: (0, 0, 1), 5: (0, 0, -1)}
    cones = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return Fan(3, rays, cones)


def fan_hirzebruch(a=1):
    """Hirzebruch surface ``F_a``; its rays do not sum to zero for ``a != 0``."""
    rays = {0: (1, 0), 1: (0, 1), 2: (-1, a), 3: (0, -1)}
    return Fan(2, rays, [(0, 1), (1, 2), (2, 3), (0, 3)])


def named_fans():
    return {
        "P1": fan_P1(),
        "P2": fan_P2(),
        "P1xP1": fan_P1xP1(),
        "P3": fan_P3(),
        "octahedron": fan_octahedron(),
    }
