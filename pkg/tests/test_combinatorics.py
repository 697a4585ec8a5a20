import random
from itertools import combinations

from hypothesis import given, settings, strategies as st

from lvmb import (
    Configuration,
    check_comp,
    emit_example,
    essential_intersection,
    hopf_datum,
    min_transversal,
    minimal_standard_submanifolds,
    restrict,
    validate,
)
from lvmb.catalog import HEXAGON

TRI = [(0, 0), (1, 0), (0, 1)]


def test_validate_examples():
    assert validate(emit_example()) == []
    bad = Configuration(1, 5, HEXAGON, [(0, 2)] + list(emit_example().E[1:]))
    assert any("cardinality" in v for v in validate(bad))
    assert any("n < 2m" in v for v in validate(Configuration(1, 1, TRI[:2], [(0, 1)])))
    dup = Configuration(1, 2, TRI, [(0, 1, 1)])
    assert any("repeated" in v for v in validate(dup))


def test_check_comp_examples():
    assert check_comp(emit_example()) == (True, None)
    assert check_comp(Configuration(1, 2, TRI, [(0, 1, 2)])) == (True, None)
    four = Configuration(1, 3, TRI + [(1, 1)], [(0, 1, 2)])
    assert check_comp(four) == (False, (0, 3))


def test_essential_intersection_and_d():
    assert essential_intersection(emit_example().E) == frozenset()
    assert essential_intersection([(0, 1, 3), (0, 2, 3)]) == {0, 3}
    assert essential_intersection([(0, 1, 2)]) == {0, 1, 2}
    assert min_transversal(emit_example().E, 5) == 2
    assert min_transversal([(0, 1, 2)], 2) == 1
    assert min_transversal([(0, 1, 3), (0, 2, 3)], 3) == 1


def test_restrict_examples():
    sub = restrict(emit_example(), {0, 2, 4})
    assert sub.n == 2 and sub.E == ((0, 1, 2),)
    assert [tuple(p) for p in sub.L] == [HEXAGON[0], HEXAGON[2], HEXAGON[4]]
    assert restrict(emit_example(), {0, 1}) is None
    torus = restrict(hopf_datum(), {0, 1, 3})
    assert torus.n == 2 * torus.m and torus.E == ((0, 1, 2),)
    full = emit_example()
    assert restrict(full, range(6)) is full


def test_minimal_standard_submanifolds():
    subs = minimal_standard_submanifolds(emit_example())
    assert len(subs) == 8
    assert all(s.n == 2 and len(s.E) == 1 for _, s in subs)
    single = Configuration(1, 2, TRI, [(0, 1, 2)])
    assert minimal_standard_submanifolds(single) == [((0, 1, 2), single)]
    assert len(minimal_standard_submanifolds(hopf_datum())) == 2


def _brute(E, n):
    for size in range(1, n + 2):
        for S in combinations(range(n + 1), size):
            if all(set(S) & set(s) for s in E):
                return size


families = st.integers(2, 8).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.sets(st.integers(0, n), min_size=1, max_size=n + 1), min_size=1, max_size=8),
    )
)


@settings(max_examples=300, deadline=None)
@given(families, st.randoms())
def test_transversal_oracle_and_relabeling(data, rnd):
    n, E = data
    E = [tuple(sorted(s)) for s in E]
    d = min_transversal(E, n)
    assert d == _brute(E, n)
    assert (d == 1) == bool(essential_intersection(E))
    perm = list(range(n + 1))
    rnd.shuffle(perm)
    assert min_transversal([tuple(perm[i] for i in s) for s in E], n) == d


def test_comp_invariant_under_relabeling():
    rng = random.Random(1)
    ex = emit_example()
    for _ in range(20):
        perm = list(range(6))
        rng.shuffle(perm)
        E = [tuple(perm[i] for i in s) for s in ex.E]
        L = [None] * 6
        for old, new in enumerate(perm):
            L[new] = ex.L[old]
        assert check_comp(Configuration(1, 5, L, E)) == (True, None)
