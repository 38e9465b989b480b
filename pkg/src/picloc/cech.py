"""Cech complexes over the coordinate cover ``{D(x_i)}``."""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .abelian import (FgAbelianGroup, IntMatrix, Subgroup, complex_cohomology,
                      complex_cohomology_mod)
from .errors import CompositionNonzero, RestrictionIncoherent


@dataclass
class UnitSheafModel:
    """Values of a sheaf on the intersections ``D(x_F)`` of a cover.

    ``value(F)`` returns a Subgroup (rank 0 means the zero group) and
    ``restrict(F, G)`` the matrix of ``value(F) -> value(G)`` in the stored
    bases, shape ``rank(G) x rank(F)``.  ``candidates`` optionally limits
    which index sets can carry a nonzero value.
    """

    n: int
    value: Callable
    restrict: Callable
    labels: tuple = ()
    candidates: Optional[list] = None

    def __post_init__(self):
        if not self.labels:
            self.labels = tuple(range(self.n))


@dataclass
class CechComplex:
    """``blocks[p]`` lists ``(F, rank)`` spanning ``C^p``; ``maps[p]`` is
    ``C^p -> C^{p+1}``; the groups are tensored with ``coefficients``."""

    n: int
    labels: tuple
    blocks: list
    maps: list
    coefficients: FgAbelianGroup = field(default_factory=lambda: FgAbelianGroup.free(1))

    def ranks(self):
        return [sum(r for _, r in b) for b in self.blocks]

    def offsets(self, p):
        out, k = {}, 0
        for f, r in self.blocks[p]:
            out[f] = k
            k += r
        return out

    def verify(self):
        for p in range(len(self.maps) - 1):
            if not (self.maps[p + 1] @ self.maps[p]).is_zero():
                raise CompositionNonzero(f"Cech coboundary d^{p + 1} d^{p} is not zero")

    def dump(self):
        """Per degree: the index sets and the outgoing coboundary matrix."""
        out = []
        for p, b in enumerate(self.blocks):
            out.append(f"# degree {p}\n")
            for f, r in b:
                out.append(" ".join(str(self.labels[i]) for i in f) + f" : {r}\n")
            if p < len(self.maps) and self.maps[p].rows:
                out.append(self.maps[p].dump())
        return "".join(out)


def check_coherence(model, nonzero):
    """``restrict(F, F) = 1`` and composition along every two-step chain."""
    for f, v in nonzero.items():
        if model.restrict(f, f) != IntMatrix.identity(v.rank):
            raise RestrictionIncoherent(f"restriction on {f} is not the identity")
    for f in nonzero:
        for g in _one_up(f, model.n):
            if g not in nonzero:
                continue
            rfg = model.restrict(f, g)
            for h in _one_up(g, model.n):
                if h not in nonzero:
                    continue
                if model.restrict(f, h) != model.restrict(g, h) @ rfg:
                    raise RestrictionIncoherent(
                        f"restrictions along {f} < {g} < {h} do not compose")


def _one_up(f, n):
    s = set(f)
    return [tuple(sorted(f + (i,))) for i in range(n) if i not in s]


def build_cech_complex(model, check=True):
    n = model.n
    cand = model.candidates
    if cand is None:
        cand = [f for k in range(1, n + 1) for f in combinations(range(n), k)]
    nonzero = {}
    for f in cand:
        f = tuple(sorted(f))
        if not f:
            continue
        v = model.value(f)
        if v.rank:
            nonzero[f] = v
    if check:
        check_coherence(model, nonzero)
    blocks = [[] for _ in range(n)]
    for f in sorted(nonzero):
        blocks[len(f) - 1].append((f, nonzero[f].rank))
    for b in blocks:
        b.sort()
    while blocks and not blocks[-1] and len(blocks) > 1:
        blocks.pop()
    maps = []
    for p in range(len(blocks) - 1):
        lo, hi = blocks[p], blocks[p + 1]
        lo_off = {}
        k = 0
        for f, r in lo:
            lo_off[f] = (k, r)
            k += r
        ncols = k
        rows = []
        for g, rg in hi:
            block_rows = [[0] * ncols for _ in range(rg)]
            for pos in range(len(g)):
                f = g[:pos] + g[pos + 1:]
                if f not in lo_off:
                    continue
                c0, rf = lo_off[f]
                sign = -1 if pos % 2 else 1
                m = model.restrict(f, g)
                for i in range(rg):
                    row = m.data[i]
                    target = block_rows[i]
                    for j in range(rf):
                        if row[j]:
                            target[c0 + j] += sign * row[j]
            rows.extend(block_rows)
        maps.append(IntMatrix.from_rows(rows, ncols))
    C = CechComplex(n, tuple(model.labels), blocks, maps)
    C.verify()
    return C


def _tail(C):
    last = C.ranks()[-1] if C.blocks else 0
    return list(C.maps) + [IntMatrix.zeros(0, last)]


def cech_cohomology(C):
    """``[H^0, ..., H^{n-1}]`` (missing top degrees are 0)."""
    out = [FgAbelianGroup.zero() for _ in range(max(C.n, 1))]
    if not C.blocks:
        return out
    for d in C.coefficients.cyclic_summands():
        if d == 0:
            hs = complex_cohomology(_tail(C))[:-1]
        else:
            hs = complex_cohomology_mod(_tail(C), d)[:-1]
        for p, h in enumerate(hs):
            out[p] = out[p] + h
    return out


# concrete models

def simplicial_unit_model(K):
    """Units of the simplicial binoid: ``Z^F`` on faces, zero elsewhere."""
    def value(f):
        return Subgroup.full(len(f)) if K.has_face(f) else Subgroup.zero(len(f))

    def restrict(f, g):
        pos = {v: i for i, v in enumerate(f)}
        return IntMatrix.from_rows([[int(pos.get(v) == j) for j in range(len(f))] for v in g],
                                   len(f))

    return UnitSheafModel(K.n, value, restrict, K.vertices,
                          [f for f in K.faces() if f])


def constant_model(K):
    one = IntMatrix.identity(1)

    def value(f):
        return Subgroup.full(1) if K.has_face(f) else Subgroup.zero(1)

    return UnitSheafModel(K.n, value, lambda f, g: one, K.vertices, [f for f in K.faces() if f])


def constant_sheaf_complex(K, G=None):
    """Cech complex of the constant sheaf ``G`` (default ``Z``) on ``K``."""
    G = FgAbelianGroup.free(1) if G is None else G
    C = build_cech_complex(constant_model(K), check=False)
    if G.is_zero():
        C.blocks = [[] for _ in C.blocks]
        C.maps = [IntMatrix.zeros(0, 0) for _ in C.maps]
    C.coefficients = G
    return C


def integral_model(B, cover=None):
    """Unit sheaf of an integral binoid over the charts ``D(x_i)``, ``i`` in
    ``cover`` (default: all non-unit generators)."""
    if cover is None:
        units = set(B.unit_generators())
        cover = [i for i in range(B.n) if i not in units]
    cover = list(cover)
    labels = tuple(B.P.generators[i] for i in cover)
    cache = {}

    def value(f):
        if f not in cache:
            cache[f] = B.unit_group([cover[i] for i in f])
        return cache[f]

    def restrict(f, g):
        src, dst = value(f), value(g)
        cols = [dst.coordinates(r) for r in src.basis.data]
        if not cols:
            return IntMatrix.zeros(dst.rank, 0)
        return IntMatrix.from_rows(cols, dst.rank).T

    return UnitSheafModel(len(cover), value, restrict, labels)
