"""Monomial ideals that need not be radical.

The unit sheaf of ``K[X]/I`` differs from that of ``K[X]/sqrt(I)`` by
``1 + N`` with ``N = sqrt(I)/I``.  In characteristic 0 its Cech cohomology
is that of the module ``N``, which is computed here one multidegree at a
time: each localized graded piece is at most one-dimensional.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product

from .abelian import IntMatrix
from .errors import CharPUnsupported
from .picard import stanley_reisner_cohomology
from .simplicial import SimplicialComplex


def _divides(g, a):
    return all(x <= y for x, y in zip(g, a))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    generators: tuple

    def __post_init__(self):
        gens = set()
        for g in self.generators:
            g = tuple(int(x) for x in g)
            if len(g) != self.n:
                raise ValueError(f"generator {g} does not have {self.n} exponents")
            if any(x < 0 for x in g):
                raise ValueError(f"generator {g} has a negative exponent")
            if not any(g):
                raise ValueError("the unit monomial is not allowed as a generator")
            gens.add(g)
        minimal = sorted(g for g in gens if not any(h != g and _divides(h, g) for h in gens))
        object.__setattr__(self, "generators", tuple(minimal))

    def contains(self, a):
        return any(_divides(g, a) for g in self.generators)

    def radical(self):
        return MonomialIdeal(self.n, [tuple(int(x > 0) for x in g) for g in self.generators])

    def is_squarefree(self):
        return all(max(g) <= 1 for g in self.generators)


def default_labels(n):
    return tuple(f"x{i + 1}" for i in range(n))


def reduction_complex(I, labels=None):
    """``(K, excluded)``: the complex of ``sqrt(I)`` on the variables whose
    pure powers are not in ``I``, and the labels of those that are."""
    labels = default_labels(I.n) if labels is None else tuple(labels)
    rad = I.radical()
    excluded = [i for i in range(I.n) if rad.contains(tuple(int(k == i) for k in range(I.n)))]
    keep = [i for i in range(I.n) if i not in excluded]
    supports = [tuple(i for i in range(I.n) if g[i]) for g in rad.generators]
    faces = []
    for k in range(len(keep) + 1):
        for f in combinations(keep, k):
            if not any(set(s) <= set(f) for s in supports):
                faces.append(tuple(keep.index(i) for i in f))
    K = SimplicialComplex([labels[i] for i in keep], faces)
    return K, [labels[i] for i in excluded]


@dataclass(frozen=True)
class DegreeBox:
    lower: tuple
    upper: tuple

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("box bounds have different lengths")
        if any(lo > hi for lo, hi in zip(self.lower, self.upper)):
            raise ValueError("box lower bound exceeds upper bound")

    @classmethod
    def cube(cls, n, lo, hi):
        return cls((lo,) * n, (hi,) * n)

    def degrees(self):
        return product(*(range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)))


def localized_piece(I, rad, a, f):
    """Dimension (0 or 1) of the degree-``a`` piece of ``N`` localized at ``x_F``."""
    fs = set(f)
    if any(a[i] < 0 for i in range(I.n) if i not in fs):
        return 0
    # far enough along a + k * 1_F every membership question has stabilized
    top = max((max(g) for g in I.generators), default=0)
    k = max([0] + [top - a[i] for i in fs])
    b = tuple(a[i] + k if i in fs else a[i] for i in range(I.n))
    return int(rad.contains(b) and not I.contains(b))


def degree_cech_ranks(I, a, rad=None):
    """``[dim H^0, ..., dim H^{n-1}]`` of the degree-``a`` Cech complex of ``N``."""
    rad = I.radical() if rad is None else rad
    n = I.n
    live = [[f for f in combinations(range(n), p + 1) if localized_piece(I, rad, a, f)]
            for p in range(n)]
    dims = [len(x) for x in live]
    ranks = []
    for p in range(n - 1):
        if not dims[p] or not dims[p + 1]:
            ranks.append(0)
            continue
        col = {f: i for i, f in enumerate(live[p])}
        rows = []
        for g in live[p + 1]:
            row = [0] * dims[p]
            for pos in range(len(g)):
                i = col.get(g[:pos] + g[pos + 1:])
                if i is not None:
                    row[i] = -1 if pos % 2 else 1
            rows.append(row)
        m = IntMatrix.from_rows(rows, dims[p])
        if p and ranks[-1] and not (m @ prev).is_zero():
            raise AssertionError("degree complex is not a complex")
        prev = m
        ranks.append(m.rank())
    out = []
    for p in range(n):
        r_out = ranks[p] if p < len(ranks) else 0
        r_in = ranks[p - 1] if p > 0 else 0
        out.append(dims[p] - r_out - r_in)
    return out


def _check_model(model):
    if model is not None and model.characteristic != 0:
        raise CharPUnsupported(
            f"the nilpotent term is only computed in characteristic 0, not for {model.label()}")


def _row(args):
    I, a = args
    return a, degree_cech_ranks(I, a)


def nilpotent_cech_dimensions(I, box, model=None, jobs=1):
    """``{a: [dim H^j]_j}`` over the box; the result does not depend on ``jobs``."""
    _check_model(model)
    degs = [tuple(a) for a in box.degrees()]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_row, [(I, a) for a in degs], chunksize=64))
    else:
        rad = I.radical()
        rows = [(a, degree_cech_ranks(I, a, rad)) for a in degs]
    return dict(rows)


def nonzero_entries(table):
    return {a: dims for a, dims in table.items() if any(dims)}


def nonreduced_report(I, model, box, labels=None, jobs=1):
    """The reduced Stanley-Reisner report, the nilpotent table, and the
    excluded variables, kept as separate summands."""
    _check_model(model)
    K, excluded = reduction_complex(I, labels)
    report = stanley_reisner_cohomology(K, model) if K.n else None
    table = nilpotent_cech_dimensions(I, box, model, jobs)
    return report, table, excluded


def table_to_dict(table):
    return {",".join(str(x) for x in a): list(d) for a, d in sorted(table.items())}
