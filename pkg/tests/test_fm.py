import random
from fractions import Fraction

from picloc import fm


def test_simple_systems():
    assert fm.feasible(1, [([1], 0, fm.GT)])
    assert not fm.feasible(1, [([1], 0, fm.GT), ([-1], 0, fm.GE)])
    assert fm.feasible(1, [([1], 0, fm.GE), ([-1], 0, fm.GE)])
    assert not fm.feasible(2, [([1, 1], -1, fm.EQ), ([1, 0], 0, fm.GT), ([0, 1], 0, fm.GT),
                               ([1, 1], -2, fm.GE)])
    assert fm.feasible(2, [([2, 0], -1, fm.EQ), ([0, 3], -1, fm.EQ)])
    assert not fm.feasible(1, [([2], -1, fm.EQ), ([4], -3, fm.EQ)])
    assert fm.feasible(0, [])
    assert not fm.feasible(0, [([], -1, fm.GE)])


def _random_system(rng, n, witness):
    cons = []
    for _ in range(rng.randint(1, 6)):
        c = [rng.randint(-3, 3) for _ in range(n)]
        val = sum(Fraction(a) * x for a, x in zip(c, witness))
        op = rng.choice([fm.GE, fm.GT, fm.EQ])
        slack = 0 if op == fm.EQ else rng.choice([0, 1]) if op == fm.GE else 1
        # c.x + c0 op 0 at the witness
        c0 = -val + slack
        cons.append((c, c0, op if not (op == fm.GT and slack == 0) else fm.GE))
    return cons


def test_feasible_when_a_witness_exists():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(1, 4)
        w = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
        assert fm.feasible(n, _random_system(rng, n, w))


def test_infeasible_when_contradiction_added():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(1, 4)
        w = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
        cons = _random_system(rng, n, w)
        c = [rng.randint(-3, 3) for _ in range(n)]
        # c.x >= 1 and c.x <= 0 cannot both hold
        cons += [(c, -1, fm.GE), ([-x for x in c], 0, fm.GE)]
        assert not fm.feasible(n, cons)
