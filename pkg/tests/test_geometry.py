import random
from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from lvmb import Configuration, affine_dimension, check_lvm, check_sep, emit_example, relint_common_point
from lvmb.catalog import HEXAGON
from lvmb.geometry import relint_certificate, verify_relint_witness

T = [(0, 0), (1, 0), (0, 1)]


def test_affine_dimension():
    assert affine_dimension(T) == 2
    assert affine_dimension([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_dimension(list(HEXAGON)) == 2
    assert affine_dimension([(3, 4)]) == 0


def test_relint_common_point_examples():
    p = relint_common_point([T, T])
    assert p is not None and all(c > 0 for c in p) and sum(p) < 1
    assert relint_common_point([T, [(2, 0), (3, 0), (2, 1)]]) is None
    ex = emit_example()
    assert relint_common_point([ex.simplex(0), ex.simplex(1)]) is not None


def test_touching_triangles_share_no_interior():
    # common edge, opposite sides
    assert relint_common_point([T, [(1, 0), (0, 1), (1, 1)]]) is None
    cert = relint_certificate([T, [(1, 0), (0, 1), (1, 1)]])
    assert cert.slack == 0


def test_witness_reverification_rejects_tampering():
    cert = relint_certificate([T, T])
    assert verify_relint_witness([T, T], cert)
    cert.point = [F(1, 2), F(1, 2)]
    assert not verify_relint_witness([T, T], cert)


def test_check_sep_examples():
    assert check_sep(emit_example()) == (True, None)
    collinear = Configuration(1, 2, [(0, 0), (1, 1), (2, 2)], [(0, 1, 2)])
    assert check_sep(collinear) == (False, {"degenerate": 0})
    apart = Configuration(1, 5, T + [(2, 0), (3, 0), (2, 1)], [(0, 1, 2), (3, 4, 5)])
    assert check_sep(apart) == (False, {"pair": (0, 1)})


def test_check_lvm_examples():
    single = Configuration(1, 2, T, [(0, 1, 2)])
    ok, point = check_lvm(single)
    assert ok and point is not None
    assert check_lvm(emit_example()) == (False, None)
    p2 = Configuration(1, 4, [(0, 0), (1, 0), (1, 0), (1, 0), (0, 1)], [(0, 1, 4), (0, 2, 4), (0, 3, 4)])
    assert check_lvm(p2)[0]


def test_higher_dimension():
    # two 4-simplices in R^4 sharing an interior point
    base = [tuple(int(i == j) for j in range(4)) for i in range(4)] + [(0, 0, 0, 0)]
    shifted = [tuple(F(x) + F(1, 10) for x in p) for p in base]
    assert relint_common_point([base, shifted]) is not None
    far = [tuple(x + 5 for x in p) for p in base]
    assert relint_common_point([base, far]) is None


coords = st.integers(-3, 3)
triangles = st.lists(st.tuples(coords, coords), min_size=3, max_size=3).filter(
    lambda t: affine_dimension(t) == 2
)


@settings(max_examples=200, deadline=None)
@given(st.lists(triangles, min_size=2, max_size=4), st.randoms())
def test_order_invariance_and_witnesses(simplices, rnd):
    cert = relint_certificate(simplices)
    shuffled = [list(s) for s in simplices]
    rnd.shuffle(shuffled)
    for s in shuffled:
        rnd.shuffle(s)
    other = relint_certificate(shuffled)
    meets = cert is not None and cert.slack > 0
    assert meets == (other is not None and other.slack > 0)
    if meets:
        assert verify_relint_witness(simplices, cert)
        assert verify_relint_witness(shuffled, other)


def test_sep_invariant_under_affine_maps():
    rng = random.Random(3)
    ex = emit_example()
    for _ in range(10):
        a, b, c, d = (F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(4))
        if a * d - b * c == 0:
            continue
        L = [(a * x + b * y + 1, c * x + d * y - 2) for x, y in ex.L]
        moved = Configuration(1, 5, L, ex.E)
        assert check_sep(moved)[0] and not check_lvm(moved)[0]
