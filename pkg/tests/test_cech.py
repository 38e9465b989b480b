import pytest

from picloc.abelian import FgAbelianGroup, IntMatrix, Subgroup, smith_normal_form
from picloc.binoid import BinoidPresentation, IntegralBinoid
from picloc.cech import (UnitSheafModel, build_cech_complex, cech_cohomology,
                         constant_sheaf_complex, integral_model, simplicial_unit_model)
from picloc.errors import RestrictionIncoherent
from picloc.simplicial import SimplicialComplex, cochain_complex, cohomology_Z, \
    cohomology_with_coefficients

from _support import random_complexes, triangle

Z = FgAbelianGroup.free(1)
ZERO = FgAbelianGroup.zero()
X2Z = BinoidPresentation("xyz", [((1, 1, 0), (0, 0, 2))])
XYZW = BinoidPresentation("xyzw", [((1, 1, 0, 0), (0, 0, 1, 1))])


def test_x_plus_y_equals_2z():
    B = IntegralBinoid(X2Z)
    C = build_cech_complex(integral_model(B, B.extremal_generators()))
    assert C.ranks() == [2, 2]
    # (a, b) -> (a - b, 2b) up to a change of basis
    _, d, _ = smith_normal_form(C.maps[0])
    assert [d[0, 0], d[1, 1]] == [1, 2]
    assert cech_cohomology(C) == [ZERO, FgAbelianGroup.cyclic(2)]
    C = build_cech_complex(integral_model(B))
    assert cech_cohomology(C)[1] == FgAbelianGroup.cyclic(2)


def test_x_plus_y_equals_z_plus_w():
    C = build_cech_complex(integral_model(IntegralBinoid(XYZW)))
    assert C.ranks() == [4, 14, 12, 3]
    h = cech_cohomology(C)
    assert h[1] == Z and h[2] == ZERO


def test_two_points_and_simplex():
    pts = SimplicialComplex.from_facets("xy", [["x"], ["y"]])
    C = build_cech_complex(simplicial_unit_model(pts))
    assert C.ranks() == [2]
    assert cech_cohomology(C) == [FgAbelianGroup.free(2), ZERO]
    s = SimplicialComplex.simplex("abcd")
    h = cech_cohomology(build_cech_complex(simplicial_unit_model(s)))
    assert h[0] == ZERO and all(g == ZERO for g in h[1:])


def test_nerve_property():
    for K in random_complexes(60, seed=12):
        C = build_cech_complex(simplicial_unit_model(K))
        present = {f for b in C.blocks for f, _ in b}
        assert present == {f for f in K.faces() if f}


def test_constant_sheaf_examples():
    t = triangle()
    C = constant_sheaf_complex(t)
    cc = cochain_complex(t)
    assert C.maps == list(cc.maps)
    assert cech_cohomology(constant_sheaf_complex(t, ZERO)) == [ZERO, ZERO, ZERO]
    pts = SimplicialComplex.from_facets("xy", [["x"], ["y"]])
    assert cech_cohomology(constant_sheaf_complex(pts))[0] == FgAbelianGroup.free(2)


def test_constant_sheaf_matches_simplicial():
    for K in random_complexes(120, seed=13):
        C = constant_sheaf_complex(K)
        assert C.maps == list(cochain_complex(K).maps)
        h = cech_cohomology(C)
        ref = cohomology_Z(K)
        for j, g in enumerate(h):
            assert g == ref.get(j, ZERO)


def test_constant_sheaf_with_torsion_coefficients():
    for K in random_complexes(30, seed=14, max_vertices=6):
        h = cech_cohomology(constant_sheaf_complex(K, FgAbelianGroup.cyclic(2)))
        ref = cohomology_with_coefficients(K, 2)
        for j in range(K.dim + 1):
            assert h[j] == ref[j].concrete()


def test_dd_zero_on_all_built_complexes():
    for K in random_complexes(40, seed=15):
        C = build_cech_complex(simplicial_unit_model(K))
        for a, b in zip(C.maps, C.maps[1:]):
            assert (b @ a).is_zero()


def test_euler_characteristic():
    for K in random_complexes(40, seed=16):
        C = build_cech_complex(simplicial_unit_model(K))
        h = cech_cohomology(C)
        assert sum((-1) ** p * r for p, r in enumerate(C.ranks())) == \
            sum((-1) ** p * g.free_rank for p, g in enumerate(h))


def test_incoherent_restrictions_are_rejected():
    def value(f):
        return Subgroup.full(1)

    def restrict(f, g):
        return IntMatrix.from_rows([[2 if len(g) > len(f) else 1]], 1)

    with pytest.raises(RestrictionIncoherent):
        build_cech_complex(UnitSheafModel(3, value, restrict))


def test_dump_is_deterministic():
    B = IntegralBinoid(X2Z)
    a = build_cech_complex(integral_model(B, B.extremal_generators())).dump()
    b = build_cech_complex(integral_model(B, B.extremal_generators())).dump()
    assert a == b
    assert a.startswith("# degree 0\nx : 1\ny : 1\n")
