"""Exact feasibility of small linear systems by Fourier-Motzkin elimination.

A constraint is ``c . x + c0  (op)  0`` with ``op`` one of ``>=``, ``>``
or ``==``.  Arithmetic is over the rationals; every constraint is scaled to
primitive integer coefficients so duplicates can be dropped.
"""

from fractions import Fraction
from math import gcd

GE, GT, EQ = ">=", ">", "=="


def _primitive(coeffs, const):
    vals = [Fraction(x) for x in coeffs] + [Fraction(const)]
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints[:-1]), ints[-1]


def feasible(nvars, constraints):
    """True iff some rational ``x`` satisfies every ``(coeffs, const, op)``."""
    eqs = []
    ineqs = set()
    for coeffs, const, op in constraints:
        if len(coeffs) != nvars:
            raise ValueError("constraint length does not match variable count")
        c, c0 = _primitive(coeffs, const)
        if op == EQ:
            eqs.append((list(c), c0))
        elif op in (GE, GT):
            ineqs.add((c, c0, op == GT))
        else:
            raise ValueError(f"unknown relation {op!r}")

    # substitute equalities away
    ineqs = [(list(c), c0, s) for c, c0, s in ineqs]
    while eqs:
        c, c0 = eqs.pop()
        k = next((i for i, x in enumerate(c) if x), None)
        if k is None:
            if c0:
                return False
            continue
        a = c[k]

        def sub(d, d0):
            # d - (d[k]/a) * c, scaled by |a| to stay integral
            f = d[k]
            if not f:
                return d, d0
            s = abs(a)
            sign = 1 if a > 0 else -1
            nd = [s * d[i] - sign * f * c[i] for i in range(nvars)]
            return nd, s * d0 - sign * f * c0

        eqs = [sub(d, d0) for d, d0 in eqs]
        ineqs = [sub(d, d0) + (st,) for d, d0, st in ineqs]

    system = set()
    for c, c0, s in ineqs:
        c, c0 = _primitive(c, c0)
        system.add((c, c0, s))

    remaining = set(range(nvars))
    while True:
        if not _consistent_constants(system):
            return False
        system = {t for t in system if any(t[0])}
        live = {i for c, _, _ in system for i, x in enumerate(c) if x}
        remaining &= live
        if not remaining:
            return True
        # cheapest variable first
        best, cost = None, None
        for v in sorted(remaining):
            pos = sum(1 for c, _, _ in system if c[v] > 0)
            neg = sum(1 for c, _, _ in system if c[v] < 0)
            if cost is None or pos * neg < cost:
                best, cost = v, pos * neg
        v = best
        remaining.discard(v)
        pos = [t for t in system if t[0][v] > 0]
        neg = [t for t in system if t[0][v] < 0]
        new = {t for t in system if t[0][v] == 0}
        for pc, p0, ps in pos:
            for nc, n0, ns in neg:
                a, b = pc[v], -nc[v]
                c = [b * pc[i] + a * nc[i] for i in range(nvars)]
                c0 = b * p0 + a * n0
                c, c0 = _primitive(c, c0)
                new.add((c, c0, ps or ns))
        system = new


def _consistent_constants(system):
    for c, c0, strict in system:
        if not any(c) and (c0 < 0 or (strict and c0 == 0)):
            return False
    return True
