"""Binoid presentations, difference groups and unit groups of localizations.

Two kinds of presentation are handled.  Semifree ones (only infinity
relations) whose radical is squarefree are simplicial binoids.  Integral
ones (only congruences) must be cancellative with torsion-free difference
group; for those the units of ``M_{x_F}`` are generated by the generators on
the minimal face of the cone containing ``x_F``.
"""

from dataclasses import dataclass
from itertools import combinations

from . import fm
from .abelian import IntMatrix, Subgroup, smith_normal_form
from .errors import NonCancellative, NonIntegral, TorsionDetected
from .simplicial import SimplicialComplex


def format_vector(vec, labels):
    terms = []
    for c, lab in zip(vec, labels):
        if c == 1:
            terms.append(str(lab))
        elif c:
            terms.append(f"{c}{lab}")
    return "+".join(terms) or "0"


@dataclass(frozen=True)
class BinoidPresentation:
    generators: tuple
    congruences: tuple = ()
    infinities: tuple = ()

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise ValueError("duplicate generator labels")
        cong = tuple((tuple(a), tuple(b)) for a, b in self.congruences)
        inf = tuple(tuple(h) for h in self.infinities)
        for v in [x for ab in cong for x in ab] + list(inf):
            if len(v) != n:
                raise ValueError(f"exponent vector {v} does not have length {n}")
            if any(not isinstance(e, int) or e < 0 for e in v):
                raise ValueError(f"exponent vector {v} has a negative or non-integer entry")
        for a, b in cong:
            if a == b:
                raise ValueError(f"congruence {self.describe((a, b))} has equal sides")
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "congruences", cong)
        object.__setattr__(self, "infinities", inf)

    @property
    def n(self):
        return len(self.generators)

    def describe(self, relation):
        if isinstance(relation[0], tuple):
            a, b = relation
            return f"{format_vector(a, self.generators)}={format_vector(b, self.generators)}"
        return f"{format_vector(relation, self.generators)}=inf"

    def is_integral(self):
        return not self.infinities

    def is_semifree(self):
        return not self.congruences

    def vector(self, subset):
        """Exponent vector ``x_F`` of a set of generator indices."""
        s = set(subset)
        return tuple(int(i in s) for i in range(self.n))

    def is_nilpotent(self, subset):
        """Whether ``x_F`` is nilpotent in a semifree presentation."""
        s = set(subset)
        return any(all(i in s for i, e in enumerate(h) if e) for h in self.infinities)

    def __str__(self):
        rels = [self.describe(r) for r in self.congruences + self.infinities]
        return f"({', '.join(map(str, self.generators))} | {', '.join(rels)})"


@dataclass(frozen=True)
class NotSimplicial:
    reason: str

    def __bool__(self):
        return False


def simplicial_binoid_of(K):
    """Semifree presentation with the minimal non-faces as infinities."""
    infinities = [tuple(int(i in f) for i in range(K.n)) for f in K.minimal_nonfaces()]
    return BinoidPresentation(K.vertices, (), tuple(infinities))


def reduction(P):
    """Semifree presentation whose infinities are the supports of P's."""
    if not P.is_semifree():
        raise ValueError("only semifree presentations have a squarefree reduction")
    supports = {tuple(int(e > 0) for e in h) for h in P.infinities}
    minimal = [s for s in supports
               if not any(t != s and all(x <= y for x, y in zip(t, s)) for t in supports)]
    return BinoidPresentation(P.generators, (), tuple(sorted(minimal)))


def _face_set(P):
    n = P.n
    faces = []
    for k in range(n + 1):
        for f in combinations(range(n), k):
            if not P.is_nilpotent(f):
                faces.append(f)
    return faces


def detect_simplicial(P):
    """The complex ``{F : x_F != inf}`` of a reduced semifree presentation, or
    a falsy ``NotSimplicial`` explaining why there is none."""
    if P.congruences:
        return NotSimplicial("congruence relations present")
    for h in P.infinities:
        s = tuple(int(e > 0) for e in h)
        if not any(all(x <= y for x, y in zip(g, s)) for g in P.infinities):
            return NotSimplicial(f"not reduced: {P.describe(h)} is not implied by a "
                                 "squarefree relation")
    return SimplicialComplex(P.generators, _face_set(P))


def simplicial_unit_sheaf_value(K, labels):
    """``Z^F`` on the vertices of F when F is a face, the zero group otherwise."""
    f = K.index_of(labels)
    return Subgroup.full(len(f)) if K.has_face(f) else Subgroup.zero(len(f))


def units_equal_reduction_check(P):
    """Unit sheaf values of P and of its reduction agree on every subset."""
    if not P.is_semifree():
        return True
    R = reduction(P)
    for k in range(P.n + 1):
        for f in combinations(range(P.n), k):
            if P.is_nilpotent(f) != R.is_nilpotent(f):
                return False
    return True


@dataclass(frozen=True)
class DifferenceGroup:
    """``Z^n / span(a - b)``; ``projection`` has row ``i`` = image of ``x_i``."""

    rank: int
    projection: IntMatrix

    def image(self, vec):
        p = self.projection
        return tuple(sum(vec[i] * p.data[i][k] for i in range(p.rows) if vec[i])
                     for k in range(self.rank))

    def generator(self, i):
        return self.projection.data[i]


def difference_group(P):
    if P.infinities:
        raise NonIntegral(f"infinity relation {P.describe(P.infinities[0])} present")
    n = P.n
    if not P.congruences:
        return DifferenceGroup(n, IntMatrix.identity(n))
    rel = IntMatrix.from_rows([[x - y for x, y in zip(a, b)] for a, b in P.congruences], n)
    _, d, v = smith_normal_form(rel)
    diag = [d[i, i] for i in range(min(d.rows, d.cols)) if d[i, i]]
    torsion = [x for x in diag if x > 1]
    if torsion:
        raise TorsionDetected(
            f"difference group of {P} has torsion Z/{torsion[-1]}; relations "
            + ", ".join(P.describe(r) for r in P.congruences))
    r = len(diag)
    proj = IntMatrix.from_rows([v.data[i][r:] for i in range(n)], n - r)
    return DifferenceGroup(n - r, proj)


def _degree_one_classes(P):
    """Union-find over 0 and the generators using relations of degree <= 1."""
    parent = list(range(P.n + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def node(v):
        return 0 if not any(v) else 1 + v.index(1)

    for a, b in P.congruences:
        if sum(a) <= 1 and sum(b) <= 1:
            ra, rb = find(node(a)), find(node(b))
            parent[max(ra, rb)] = min(ra, rb)
    return find


class IntegralBinoid:
    """An integral presentation checked for torsion and obvious non-cancellation."""

    def __init__(self, P):
        self.P = P
        self.group = difference_group(P)
        find = _degree_one_classes(P)
        seen = {}
        zero = (0,) * self.group.rank
        for i in range(P.n):
            img = self.group.generator(i)
            if img == zero and find(i + 1) != find(0):
                raise NonCancellative(
                    f"generator {P.generators[i]} maps to 0 in the difference group "
                    "but is not the identity")
            j = seen.setdefault(img, i)
            if j != i and find(i + 1) != find(j + 1):
                raise NonCancellative(
                    f"generators {P.generators[j]} and {P.generators[i]} are equal in the "
                    "difference group but not in the binoid")
        self._cache = {}

    @property
    def n(self):
        return self.P.n

    def face_contains(self, f, i):
        """Whether ``x_i`` lies in the minimal cone face containing ``f``."""
        key = (tuple(f), i)
        if key not in self._cache:
            self._cache[key] = _minimal_face_contains(self.group, f, i)
        return self._cache[key]

    def face_of(self, subset):
        f = self.P.vector(subset)
        return tuple(i for i in range(self.n) if self.face_contains(f, i))

    def unit_generators(self):
        return self.face_of(())

    def unit_group(self, subset):
        gens = [self.group.generator(i) for i in self.face_of(subset)]
        return Subgroup.from_generators(gens, self.group.rank)

    def extremal_generators(self):
        """One generator per extremal ray of the cone modulo its units."""
        units = set(self.unit_generators())
        faces = {}
        for i in range(self.n):
            if i not in units:
                faces.setdefault(frozenset(self.face_of([i])), i)
        minimal = [f for f in faces if not any(g < f for g in faces)]
        return sorted(faces[f] for f in minimal)


def _minimal_face_contains(group, f, i):
    # t * f - x_i = sum_j lam_j x_j with t > 0, lam >= 0
    n = group.projection.rows
    fbar = group.image(f)
    xi = group.generator(i)
    cons = []
    for k in range(group.rank):
        coeffs = [fbar[k]] + [-group.projection.data[j][k] for j in range(n)]
        cons.append((coeffs, -xi[k], fm.EQ))
    cons.append(([1] + [0] * n, 0, fm.GT))
    for j in range(n):
        cons.append(([0] * (j + 1) + [1] + [0] * (n - j - 1), 0, fm.GE))
    return fm.feasible(n + 1, cons)


def minimal_face_contains(P, f, i):
    return IntegralBinoid(P).face_contains(f, i)


def localization_unit_group(P, subset):
    """Units of ``M_{x_F}`` as a subgroup of the difference group."""
    return IntegralBinoid(P).unit_group(subset)

