"""Local Picard groups and unit-sheaf cohomology reports.

Simplicial binoids are handled by two independent pipelines: the Cech
complex of the unit sheaf (split per vertex), and the link formula
``H^j = sum_v reduced H^{j-1}(lk v)``.  Stanley-Reisner algebras add the
cohomology of the complex with coefficients in ``K*``.
"""

import json
from dataclasses import dataclass, field
from typing import Optional

from .abelian import FgAbelianGroup, IntMatrix, complex_cohomology
from .binoid import IntegralBinoid
from .cech import build_cech_complex, cech_cohomology, integral_model, simplicial_unit_model
from .errors import (CrossCheckMismatch, Disconnected, NotAGraph, UncoveredVertex,
                     VoidComplex)
from .fields import GroupValue
from .simplicial import cohomology_Z, cohomology_with_coefficients


@dataclass
class DegreeEntry:
    j: int
    combinatorial: FgAbelianGroup
    per_vertex: dict = field(default_factory=dict)
    field: Optional[GroupValue] = None

    def total(self):
        """Combinatorial plus field part when the latter is concrete, else None."""
        if self.field is None:
            return self.combinatorial
        c = self.field.concrete()
        return None if c is None else self.combinatorial + c

    def describe(self):
        if self.field is None:
            return str(self.combinatorial)
        parts = [p for p in (self.combinatorial, self.field) if not p.is_zero()]
        if self.field.concrete() is not None:
            return str(self.total())
        return " + ".join(str(p) for p in parts) or "0"

    def to_dict(self):
        total = self.total()
        known = total if total is not None else self.combinatorial + self.field.known_part()
        return {
            "j": self.j,
            "free_rank": known.free_rank,
            "torsion": list(known.invariant_factors),
            "combinatorial": self.combinatorial.to_dict(),
            "per_vertex": {str(k): g.to_dict() for k, g in self.per_vertex.items()},
            "field": None if self.field is None else self.field.to_dict(),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["j"], FgAbelianGroup.from_dict(d["combinatorial"]),
                   {k: FgAbelianGroup.from_dict(v) for k, v in d["per_vertex"].items()},
                   None if d["field"] is None else GroupValue.from_dict(d["field"]))


@dataclass
class CohomologyReport:
    kind: str
    degrees: list
    provenance: str
    chain_ranks: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def degree(self, j):
        for e in self.degrees:
            if e.j == j:
                return e
        raise KeyError(j)

    def group(self, j):
        return self.degree(j).combinatorial

    @property
    def picard(self):
        """``H^1``: the local Picard group (combinatorial part)."""
        return self.group(1) if any(e.j == 1 for e in self.degrees) else FgAbelianGroup.zero()

    def to_dict(self):
        out = {"kind": self.kind,
               "degrees": [e.to_dict() for e in self.degrees],
               "provenance": self.provenance}
        if self.chain_ranks:
            out["chain_ranks"] = list(self.chain_ranks)
        if self.extra:
            out["extra"] = self.extra
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d):
        return cls(d["kind"], [DegreeEntry.from_dict(e) for e in d["degrees"]],
                   d["provenance"], d.get("chain_ranks", []), d.get("extra", {}))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, CohomologyReport) and self.to_dict() == other.to_dict()


def _require_singletons(K):
    if K.is_void():
        raise VoidComplex("the void complex has no punctured spectrum")
    missing = [v for i, v in enumerate(K.vertices) if not K.has_face((i,))]
    if missing:
        raise UncoveredVertex(f"vertices {missing} are not faces")


def _top(K):
    return max(K.dim, 0)


def vertex_blocks(C):
    """Per vertex, the coordinates of each ``C^p`` belonging to it."""
    out = {v: [] for v in range(C.n)}
    for p, blocks in enumerate(C.blocks):
        k = 0
        idx = {v: [] for v in range(C.n)}
        for f, r in blocks:
            for pos, v in enumerate(f):
                idx[v].append(k + pos)
            k += r
        for v in range(C.n):
            out[v].append(idx[v])
    return out


def _sub(m, rows, cols):
    return IntMatrix.from_rows([[m.data[i][j] for j in cols] for i in rows], len(cols))


def picloc_simplicial_direct(K):
    """Cech cohomology of the unit sheaf of the simplicial binoid of ``K``."""
    _require_singletons(K)
    C = build_cech_complex(simplicial_unit_model(K))
    total = cech_cohomology(C)
    coords = vertex_blocks(C)
    per_vertex = {}
    for v in range(K.n):
        c = coords[v]
        maps = [_sub(C.maps[p], c[p + 1], c[p]) for p in range(len(C.maps))]
        maps.append(IntMatrix.zeros(0, len(c[-1])))
        per_vertex[v] = complex_cohomology(maps)[:-1]
    degrees = []
    for j in range(_top(K) + 1):
        pv = {K.vertices[v]: (hs[j] if j < len(hs) else FgAbelianGroup.zero())
              for v, hs in per_vertex.items()}
        split = FgAbelianGroup.zero()
        for g in pv.values():
            split = split + g
        if split != total[j]:
            raise CrossCheckMismatch(f"vertex split of H^{j} disagrees with the total")
        degrees.append(DegreeEntry(j, total[j], pv))
    return CohomologyReport("simplicial", degrees, "direct", C.ranks())


def picloc_simplicial_formula(K):
    """``H^j = sum_v reduced H^{j-1}(lk v)``."""
    _require_singletons(K)
    links = {v: cohomology_Z(K.link_index((i,)), reduced=True)
             for i, v in enumerate(K.vertices)}
    degrees = []
    zero = FgAbelianGroup.zero()
    for j in range(_top(K) + 1):
        pv = {v: h.get(j - 1, zero) for v, h in links.items()}
        tot = zero
        for g in pv.values():
            tot = tot + g
        degrees.append(DegreeEntry(j, tot, pv))
    return CohomologyReport("simplicial", degrees, "formula")


def crosscheck_simplicial(K):
    direct = picloc_simplicial_direct(K)
    formula = picloc_simplicial_formula(K)
    for a, b in zip(direct.degrees, formula.degrees):
        if a.combinatorial != b.combinatorial:
            raise CrossCheckMismatch(
                f"H^{a.j}: direct {a.combinatorial} but formula {b.combinatorial} on {K!r}")
        for v in a.per_vertex:
            if a.per_vertex[v] != b.per_vertex[v]:
                raise CrossCheckMismatch(
                    f"H^{a.j} at vertex {v}: direct {a.per_vertex[v]} but formula "
                    f"{b.per_vertex[v]}")
    return CohomologyReport("simplicial", formula.degrees, "both-agree", direct.chain_ranks)


def picloc_integral_binoid(P, cover="coordinate"):
    """Cech cohomology of the unit sheaf of an integral binoid.

    ``cover`` is ``"coordinate"`` (every non-unit generator), ``"extremal"``
    (one generator per extremal ray) or an explicit list of generator indices.
    """
    B = IntegralBinoid(P)
    if cover == "coordinate":
        idx = None
    elif cover == "extremal":
        idx = B.extremal_generators()
    else:
        idx = list(cover)
    model = integral_model(B, idx)
    C = build_cech_complex(model)
    hs = cech_cohomology(C)
    degrees = [DegreeEntry(j, h) for j, h in enumerate(hs)]
    extra = {"difference_group_rank": B.group.rank,
             "cover": list(model.labels),
             "units": [P.generators[i] for i in B.unit_generators()]}
    return CohomologyReport("binoid", degrees, "direct", C.ranks(), extra)


def stanley_reisner_cohomology(K, model, crosscheck=True):
    """Combinatorial part plus ``H^j(K, K*)`` in each degree ``0..dim``."""
    comb = crosscheck_simplicial(K) if crosscheck else picloc_simplicial_formula(K)
    fieldpart = cohomology_with_coefficients(K, model)
    degrees = []
    for e in comb.degrees:
        fv = fieldpart.get(e.j)
        if fv is None:
            fv = GroupValue(model)
        degrees.append(DegreeEntry(e.j, e.combinatorial, e.per_vertex, fv))
    return CohomologyReport("stanley-reisner", degrees, comb.provenance, comb.chain_ranks,
                            {"field_model": model.spec()})


def graph_fast_path(K):
    """``(s, r)``: isolated vertices and ``sum (deg v - 1)`` over the others."""
    if K.dim > 1:
        raise NotAGraph(f"complex has dimension {K.dim}")
    degs = [K.degree(v) for v in range(K.n)]
    s = sum(1 for d in degs if d == 0)
    r = sum(d - 1 for d in degs if d > 0)
    return s, r


@dataclass(frozen=True)
class GradedRanks:
    h0: int
    edges: int
    middle: int
    h1: int
    identity: bool

    def as_tuple(self):
        return (self.h0, self.edges, self.middle, self.h1)


def graph_graded_report(K):
    """Ranks of ``0 -> Z -> Z^|E| -> Z^(2|E|-|V|) -> H^1(K, Z) -> 0``."""
    if K.dim > 1:
        raise NotAGraph(f"complex has dimension {K.dim}")
    if K.dim < 1:
        raise NotAGraph("a graph needs at least one edge")
    if len(K.components()) != 1:
        raise Disconnected(f"graph has {len(K.components())} components")
    e, v = len(K.faces(1)), len(K.faces(0))
    h1 = cohomology_Z(K)[1].free_rank
    _, r = graph_fast_path(K)
    middle = 2 * e - v
    ok = middle == r and h1 == e - v + 1 and 1 - e + middle - h1 == 0
    return GradedRanks(1, e, middle, h1, ok)
