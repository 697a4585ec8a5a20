"""Shared test data: the configuration corpus and a few random generators."""

import random
from fractions import Fraction
from functools import lru_cache

from lvmb import Configuration, check_sep, emit_example, named_fans, realize_fan, validate
from lvmb.catalog import HEXAGON, HEXAGON_FAMILY

STEPS = [Fraction(k, 2) for k in range(-3, 4)]


def hexagon_perturbations(count, seed=7, want_sep=True):
    """Random half-integer moves of the hexagon vertices, filtered on (sep)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        L = [(x + rng.choice(STEPS), y + rng.choice(STEPS)) for x, y in HEXAGON]
        c = Configuration(1, 5, L, HEXAGON_FAMILY)
        if validate(c):
            continue
        if check_sep(c)[0] == want_sep:
            out.append(c)
    return out


@lru_cache(maxsize=None)
def corpus():
    """``(name, config)`` pairs: realized named fans, the Example, 45 perturbations."""
    items = [(f"realize({name})", realize_fan(fan)[0]) for name, fan in named_fans().items()]
    items.append(("example", emit_example()))
    items += [(f"perturbed[{k}]", c) for k, c in enumerate(hexagon_perturbations(45))]
    return tuple(items)


def random_rational_config(rng):
    m = rng.choice([1, 1, 2])
    n = 2 * m + rng.randint(0, 3)
    L = [
        tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(2 * m))
        for _ in range(n + 1)
    ]
    return Configuration(m, n, L, [tuple(range(2 * m + 1))])


def random_family(rng, n, size, count):
    sets = set()
    universe = list(range(n + 1))
    while len(sets) < count:
        sets.add(tuple(sorted(rng.sample(universe, size))))
    return sorted(sets)
