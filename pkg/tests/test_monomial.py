import random
from itertools import combinations

import pytest

from picloc.errors import CharPUnsupported
from picloc.fields import AlgClosedChar0, FiniteField, Rationals, Symbolic
from picloc.monomial import (DegreeBox, MonomialIdeal, degree_cech_ranks, localized_piece,
                             nilpotent_cech_dimensions, nonreduced_report, nonzero_entries,
                             reduction_complex)
from picloc.picard import stanley_reisner_cohomology


def _brute_piece(I, a, f, reach=12):
    """Some x^(a + k 1_F) lies in sqrt(I) and no further power of x_F sends it into I."""
    fs = set(f)
    rad = I.radical()
    for k in range(reach):
        b = [a[i] + k if i in fs else a[i] for i in range(I.n)]
        if min(b) < 0 or not rad.contains(b):
            continue
        if all(not I.contains([b[i] + l if i in fs else b[i] for i in range(I.n)])
               for l in range(reach)):
            return 1
    return 0


def test_ideal_is_minimalised():
    I = MonomialIdeal(2, [(2, 0), (3, 1), (2, 0)])
    assert I.generators == ((2, 0),)
    assert I.radical().generators == ((1, 0),)
    with pytest.raises(ValueError):
        MonomialIdeal(2, [(0, 0)])


def test_reduction_examples():
    K, ex = reduction_complex(MonomialIdeal(3, [(1, 1, 1)]), "xyz")
    assert K.facet_labels() == [("x", "y"), ("x", "z"), ("y", "z")] and ex == []
    K, ex = reduction_complex(MonomialIdeal(3, [(2, 1, 0), (0, 1, 1)]), "xyz")
    assert sorted(K.facet_labels()) == [("x", "z"), ("y",)]
    K, ex = reduction_complex(MonomialIdeal(2, [(2, 0)]), "xy")
    assert ex == ["x"] and K.vertices == ("y",) and K.facet_labels() == [("y",)]


def test_reduction_idempotent():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)] or [(1,) * n]
        I = MonomialIdeal(n, gens)
        K1, e1 = reduction_complex(I)
        K2, e2 = reduction_complex(I.radical())
        assert K1.faces() == K2.faces() and e1 == e2
        assert I.radical().radical() == I.radical()


def test_x_squared_table():
    I = MonomialIdeal(2, [(2, 0)])
    box = DegreeBox.cube(2, -2, 2)
    table = nilpotent_cech_dimensions(I, box)
    nz = nonzero_entries(table)
    assert nz == {(1, b): [1, 0] for b in range(-2, 3)}


def test_hand_zero_cases():
    box = DegreeBox.cube(2, -3, 3)
    for gens in ([(2, 0), (1, 1)], [(1, 1)], [(1, 0), (0, 1)]):
        assert not nonzero_entries(nilpotent_cech_dimensions(MonomialIdeal(2, gens), box))


def _random_ideal(rng, n):
    gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 3))]
    return MonomialIdeal(n, [g for g in gens if any(g)] or [(2,) + (0,) * (n - 1)])


def test_localized_piece_against_brute_force():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 3)
        I = _random_ideal(rng, n)
        rad = I.radical()
        for a in DegreeBox.cube(n, -2, 3).degrees():
            for p in range(1, n + 1):
                for f in combinations(range(n), p):
                    assert localized_piece(I, rad, a, f) == _brute_piece(I, a, f), (I, a, f)


def test_euler_characteristic_per_degree():
    rng = random.Random(6)
    for _ in range(40):
        n = rng.randint(1, 3)
        I = _random_ideal(rng, n)
        rad = I.radical()
        for a in DegreeBox.cube(n, -2, 2).degrees():
            dims = degree_cech_ranks(I, a)
            chain = [sum(localized_piece(I, rad, a, f) for f in combinations(range(n), p + 1))
                     for p in range(n)]
            assert sum((-1) ** p * d for p, d in enumerate(dims)) == \
                sum((-1) ** p * c for p, c in enumerate(chain))
            assert all(d >= 0 for d in dims)


def test_squarefree_gives_zero_table():
    rng = random.Random(7)
    seen_nonzero = 0
    for _ in range(60):
        n = rng.randint(1, 3)
        I = _random_ideal(rng, n)
        table = nilpotent_cech_dimensions(I, DegreeBox.cube(n, -1, 3))
        if I.is_squarefree():
            assert not nonzero_entries(table)
        if nonzero_entries(table):
            assert not I.is_squarefree()
            seen_nonzero += 1
    assert seen_nonzero


def test_non_squarefree_with_zero_table():
    # nilpotents that die on every chart leave no trace
    box = DegreeBox.cube(2, -3, 3)
    assert not nonzero_entries(nilpotent_cech_dimensions(MonomialIdeal(2, [(2, 0), (1, 1)]), box))
    assert not nonzero_entries(nilpotent_cech_dimensions(MonomialIdeal(1, [(2,)]),
                                                         DegreeBox.cube(1, -3, 3)))


def test_jobs_do_not_change_the_table():
    I = MonomialIdeal(2, [(2, 1), (1, 2)])
    box = DegreeBox.cube(2, -2, 2)
    assert nilpotent_cech_dimensions(I, box, jobs=2) == nilpotent_cech_dimensions(I, box)


def test_characteristic_p_rejected():
    I = MonomialIdeal(2, [(2, 0)])
    with pytest.raises(CharPUnsupported):
        nilpotent_cech_dimensions(I, DegreeBox.cube(2, 0, 1), FiniteField(5))
    for model in (Rationals(), AlgClosedChar0(), Symbolic()):
        nilpotent_cech_dimensions(I, DegreeBox.cube(2, 0, 1), model)


def test_nonreduced_report():
    I = MonomialIdeal(3, [(1, 1, 1)])
    report, table, excluded = nonreduced_report(I, Symbolic(), DegreeBox.cube(3, -1, 1), "xyz")
    K, _ = reduction_complex(I, "xyz")
    assert report == stanley_reisner_cohomology(K, Symbolic())
    assert not nonzero_entries(table) and excluded == []
    report, table, excluded = nonreduced_report(MonomialIdeal(2, [(2, 0)]), Symbolic(),
                                                DegreeBox.cube(2, -2, 2), "xy")
    assert excluded == ["x"] and report.degree(0).combinatorial.free_rank == 1
    assert len(nonzero_entries(table)) == 5
