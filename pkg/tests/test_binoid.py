import random
from itertools import product

import pytest

from picloc.abelian import Subgroup
from picloc.binoid import (BinoidPresentation, IntegralBinoid, detect_simplicial,
                           difference_group, localization_unit_group, minimal_face_contains,
                           reduction, simplicial_binoid_of, simplicial_unit_sheaf_value,
                           units_equal_reduction_check)
from picloc.errors import NonCancellative, NonIntegral, TorsionDetected
from picloc.simplicial import SimplicialComplex

from _support import random_complexes, triangle

X2Z = BinoidPresentation("xyz", [((1, 1, 0), (0, 0, 2))])
XYZW = BinoidPresentation("xyzw", [((1, 1, 0, 0), (0, 0, 1, 1))])
NEIL = BinoidPresentation("xy", [((2, 0), (0, 3))])
FREE3 = BinoidPresentation("xyz")
CONE3 = BinoidPresentation("abcd", [((1, 0, 1, 0), (0, 1, 0, 1))])
PYRAMID = BinoidPresentation("xyzw", [((1, 1, 1, 0), (0, 0, 0, 3))])
WITH_UNIT = BinoidPresentation("uvx", [((1, 1, 0), (0, 0, 0))])


def test_simplicial_binoid_of():
    assert simplicial_binoid_of(triangle()).infinities == ((1, 1, 1),)
    pts = SimplicialComplex.from_facets("xy", [["x"], ["y"]])
    assert simplicial_binoid_of(pts).infinities == ((1, 1),)
    P = simplicial_binoid_of(SimplicialComplex.simplex("abc"))
    assert P.infinities == () and P.congruences == ()


def test_detect_simplicial():
    K = detect_simplicial(BinoidPresentation("xyz", infinities=[(1, 1, 1)]))
    assert K and K.faces() == triangle().faces()
    assert not detect_simplicial(X2Z)
    r = detect_simplicial(BinoidPresentation("xyz", infinities=[(2, 1, 0)]))
    assert not r and "not reduced" in r.reason
    R = reduction(BinoidPresentation("xyz", infinities=[(2, 1, 0)]))
    assert R.infinities == ((1, 1, 0),)


def test_detect_inverts_simplicial_binoid_of():
    for K in random_complexes(60, seed=8):
        assert detect_simplicial(simplicial_binoid_of(K)).faces() == K.faces()


def test_difference_groups():
    g = difference_group(X2Z)
    assert g.rank == 2
    # y = 2z - x
    x, y, z = (g.generator(i) for i in range(3))
    assert tuple(2 * c - a for a, c in zip(x, z)) == y
    assert difference_group(XYZW).rank == 3
    assert difference_group(BinoidPresentation("xy")).rank == 2
    assert difference_group(BinoidPresentation("xy")).projection.tolist() == [[1, 0], [0, 1]]
    with pytest.raises(TorsionDetected, match="2e=e"):
        difference_group(BinoidPresentation("efg", [((2, 0, 0), (1, 0, 0)), ((0, 2, 0), (0, 1, 0)),
                                                    ((0, 0, 2), (1, 1, 0))]))
    with pytest.raises(TorsionDetected):
        difference_group(BinoidPresentation("xy", [((2, 0), (0, 0))]))
    with pytest.raises(NonIntegral):
        difference_group(BinoidPresentation("xy", infinities=[(1, 1)]))


def test_presentation_validation():
    with pytest.raises(ValueError):
        BinoidPresentation("xy", [((1, 0), (1, 0))])
    with pytest.raises(ValueError):
        BinoidPresentation("xy", [((1, 0, 0), (0, 1))])
    with pytest.raises(ValueError):
        BinoidPresentation("xy", infinities=[(-1, 1)])
    assert str(X2Z) == "(x, y, z | x+y=2z)"
    assert BinoidPresentation("xy", infinities=[(2, 1)]).describe((2, 1)) == "2x+y=inf"


def test_face_examples():
    assert not minimal_face_contains(X2Z, (1, 0, 0), 1)
    assert minimal_face_contains(X2Z, (1, 1, 0), 2)
    for P in (X2Z, XYZW, NEIL, FREE3):
        for i in range(P.n):
            assert minimal_face_contains(P, P.vector([i]), i)


def test_unit_group_examples():
    assert localization_unit_group(X2Z, [0]).rank == 1
    assert localization_unit_group(X2Z, [0]).contains(difference_group(X2Z).generator(0))
    assert localization_unit_group(X2Z, [0, 1]) == Subgroup.full(2)
    assert localization_unit_group(XYZW, [0, 1]).rank == 3
    pairs = {(i, j): localization_unit_group(XYZW, [i, j]).rank
             for i in range(4) for j in range(i + 1, 4)}
    assert pairs == {(0, 1): 3, (2, 3): 3, (0, 2): 2, (0, 3): 2, (1, 2): 2, (1, 3): 2}
    assert sum(pairs.values()) == 14


def _monoid_elements(B, bound):
    gens = [B.group.generator(i) for i in range(B.n)]
    for coeffs in product(range(bound + 1), repeat=B.n):
        yield tuple(sum(c * g[k] for c, g in zip(coeffs, gens)) for k in range(B.group.rank))


def _oracle_face_contains(B, f, i, kmax=6, bound=4):
    """x_i lies on the minimal face of f iff x_i + m = k f for some monoid m."""
    fbar = B.group.image(f)
    xi = B.group.generator(i)
    elems = set(_monoid_elements(B, bound))
    for k in range(1, kmax + 1):
        target = tuple(k * a - b for a, b in zip(fbar, xi))
        if target in elems:
            return True
    return False


@pytest.mark.parametrize("P", [X2Z, XYZW, NEIL, FREE3, CONE3, PYRAMID, WITH_UNIT],
                         ids=["x+y=2z", "x+y=z+w", "neil", "free", "cone", "pyramid", "unit"])
def test_face_test_against_brute_force(P):
    B = IntegralBinoid(P)
    for size in range(P.n + 1):
        for f in product([0, 1], repeat=P.n):
            if sum(f) != size:
                continue
            for i in range(P.n):
                assert B.face_contains(f, i) == _oracle_face_contains(B, f, i), (P, f, i)


def test_monotonicity_and_inclusion():
    for P in (X2Z, XYZW, CONE3, PYRAMID, NEIL):
        B = IntegralBinoid(P)
        subsets = [tuple(i for i in range(P.n) if (s >> i) & 1) for s in range(1 << P.n)]
        for f in subsets:
            face = B.face_of(f)
            vec = P.vector(f)
            for j in face:
                bumped = tuple(v + (k == j) for k, v in enumerate(vec))
                for i in range(P.n):
                    if B.face_contains(vec, i):
                        assert B.face_contains(bumped, i)
            for g in subsets:
                if set(f) <= set(g):
                    assert B.unit_group(f).issubset(B.unit_group(g))


def test_units_and_extremal_generators():
    B = IntegralBinoid(WITH_UNIT)
    assert B.unit_generators() == (0, 1)
    assert B.extremal_generators() == [2]
    assert IntegralBinoid(X2Z).extremal_generators() == [0, 1]
    assert IntegralBinoid(CONE3).extremal_generators() == [0, 1, 2, 3]


def test_non_cancellative_is_rejected():
    with pytest.raises(NonCancellative):
        IntegralBinoid(BinoidPresentation("xyz", [((1, 0, 1), (0, 1, 1))]))
    with pytest.raises(NonCancellative):
        IntegralBinoid(BinoidPresentation("xy", [((1, 1), (0, 1))]))


def test_simplicial_unit_values_and_face_rule():
    t = triangle()
    assert simplicial_unit_sheaf_value(t, ["x", "y"]) == Subgroup.full(2)
    assert simplicial_unit_sheaf_value(t, ["x", "y", "z"]).rank == 0
    assert simplicial_unit_sheaf_value(t, []).rank == 0
    for K in random_complexes(40, seed=9):
        P = simplicial_binoid_of(K)
        for s in range(1 << K.n):
            f = tuple(i for i in range(K.n) if (s >> i) & 1)
            assert (not P.is_nilpotent(f)) == K.has_face(f)


def test_reduction_check():
    assert units_equal_reduction_check(simplicial_binoid_of(triangle()))
    assert units_equal_reduction_check(BinoidPresentation("xy", infinities=[(2, 1)]))
    assert units_equal_reduction_check(X2Z)
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(1, 5)
        inf = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        inf = [h for h in inf if any(h)] or [(1,) * n]
        P = BinoidPresentation(tuple(range(n)), (), inf)
        assert units_equal_reduction_check(P)
        assert detect_simplicial(reduction(P))
