"""Finite simplicial complexes, links, and their (co)chain complexes."""

from dataclasses import dataclass
from itertools import combinations

from .abelian import FgAbelianGroup, IntMatrix, complex_cohomology, complex_cohomology_mod
from .errors import NotAFace, UncoveredVertex, UnknownVertex, VoidComplex


class SimplicialComplex:
    """A downward-closed family of faces on an ordered vertex list.

    Faces are stored as sorted tuples of vertex indices.  Two degenerate
    complexes are representable: VOID (no faces) and IRRELEVANT (only the
    empty face).
    """

    __slots__ = ("vertices", "_index", "_faces", "_by_dim", "_facets")

    def __init__(self, vertices, faces):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._faces = frozenset(faces)
        by_dim = {}
        for f in self._faces:
            by_dim.setdefault(len(f) - 1, []).append(f)
        self._by_dim = {d: sorted(fs) for d, fs in by_dim.items()}
        self._facets = None

    # construction

    @classmethod
    def from_facets(cls, vertices, facets, require_singletons=True):
        """Downward closure of ``facets``; every listed vertex must be covered
        when ``require_singletons`` is set."""
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        faces = set()
        covered = set()
        for facet in facets:
            try:
                idx = tuple(sorted({index[v] for v in facet}))
            except KeyError as exc:
                raise UnknownVertex(f"vertex {exc.args[0]!r} is not in the vertex list") from None
            if idx in faces:
                continue
            covered.update(idx)
            for k in range(len(idx) + 1):
                faces.update(combinations(idx, k))
        if require_singletons:
            missing = [vertices[i] for i in range(len(vertices)) if i not in covered]
            if missing:
                raise UncoveredVertex(
                    f"vertices {missing} lie in no facet; list them as singleton facets")
        return cls(vertices, faces)

    @classmethod
    def from_index_faces(cls, vertices, facets):
        """Closure of facets given as index tuples, without the singleton check."""
        faces = set()
        for f in facets:
            f = tuple(sorted(f))
            for k in range(len(f) + 1):
                faces.update(combinations(f, k))
        return cls(vertices, faces)

    @classmethod
    def void(cls, vertices=()):
        return cls(vertices, ())

    @classmethod
    def irrelevant(cls, vertices=()):
        return cls(vertices, [()])

    @classmethod
    def simplex(cls, vertices):
        vertices = tuple(vertices)
        return cls.from_facets(vertices, [vertices])

    @classmethod
    def from_mask(cls, mask, n, labels=None):
        """Complex whose faces are the subsets ``s`` with bit ``s`` of ``mask`` set."""
        labels = tuple(range(n)) if labels is None else tuple(labels)
        faces = [tuple(v for v in range(n) if (s >> v) & 1)
                 for s in range(1 << n) if (mask >> s) & 1]
        return cls(labels, faces)

    # basic queries

    @property
    def n(self):
        return len(self.vertices)

    def is_void(self):
        return not self._faces

    def is_irrelevant(self):
        return self._faces == {()}

    @property
    def dim(self):
        """Largest face dimension; -1 for IRRELEVANT and VOID."""
        return max(self._by_dim, default=-1)

    def faces(self, dim=None):
        """Faces as index tuples, by dimension then lexicographically."""
        if dim is not None:
            return list(self._by_dim.get(dim, ()))
        return [f for d in sorted(self._by_dim) for f in self._by_dim[d]]

    def f_vector(self):
        return [len(self._by_dim.get(d, ())) for d in range(self.dim + 1)]

    @property
    def facets(self):
        if self._facets is None:
            fs = set(self._faces)
            maximal = [f for f in fs
                       if not any(f != g and set(f) <= set(g) for g in fs if len(g) > len(f))]
            self._facets = sorted(maximal, key=lambda f: (len(f), f))
        return list(self._facets)

    def facet_labels(self):
        return [tuple(self.vertices[i] for i in f) for f in self.facets]

    def index_of(self, labels):
        try:
            return tuple(sorted(self._index[v] for v in labels))
        except KeyError as exc:
            raise UnknownVertex(f"vertex {exc.args[0]!r} is not in the complex") from None

    def labels_of(self, face):
        return tuple(self.vertices[i] for i in face)

    def has_face(self, face):
        return tuple(sorted(face)) in self._faces

    def is_face(self, labels):
        return self.index_of(labels) in self._faces

    def mask(self):
        m = 0
        for f in self._faces:
            s = 0
            for v in f:
                s |= 1 << v
            m |= 1 << s
        return m

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and self.vertices == other.vertices
                and self._faces == other._faces)

    def __hash__(self):
        return hash((self.vertices, self._faces))

    def __repr__(self):
        if self.is_void():
            return f"SimplicialComplex(VOID on {list(self.vertices)})"
        facets = [" ".join(str(v) for v in f) or "{}" for f in self.facet_labels()]
        return f"SimplicialComplex({list(self.vertices)}; facets {facets})"

    # constructions

    def link(self, labels):
        """Link of a face given by labels, as a complex on the other vertices."""
        f = self.index_of(labels)
        return self.link_index(f)

    def link_index(self, f):
        f = tuple(sorted(f))
        if f not in self._faces:
            raise NotAFace(f"{self.labels_of(f)} is not a face")
        fs = set(f)
        rest = [i for i in range(self.n) if i not in fs]
        new = {old: k for k, old in enumerate(rest)}
        faces = []
        for g in self._faces:
            if fs.isdisjoint(g) and tuple(sorted(fs | set(g))) in self._faces:
                faces.append(tuple(new[i] for i in g))
        return SimplicialComplex([self.vertices[i] for i in rest], faces)

    def restriction(self, labels):
        w = set(self.index_of(labels))
        keep = [i for i in range(self.n) if i in w]
        new = {old: k for k, old in enumerate(keep)}
        faces = [tuple(new[i] for i in g) for g in self._faces if w.issuperset(g)]
        return SimplicialComplex([self.vertices[i] for i in keep], faces)

    def minimal_nonfaces(self):
        out = []
        for s in range(1, 1 << self.n):
            f = tuple(v for v in range(self.n) if (s >> v) & 1)
            if f in self._faces:
                continue
            if all(tuple(x for x in f if x != v) in self._faces for v in f):
                out.append(f)
        return sorted(out, key=lambda f: (len(f), f))

    def components(self):
        """Connected components as sorted lists of vertex indices (vertices
        that are faces only)."""
        parent = {i: i for (i,) in self._by_dim.get(0, ())}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self._by_dim.get(1, ()):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        comps = {}
        for v in parent:
            comps.setdefault(find(v), []).append(v)
        return sorted(sorted(c) for c in comps.values())

    def degree(self, v):
        return sum(1 for e in self._by_dim.get(1, ()) if v in e)


@dataclass(frozen=True)
class CochainComplexZ:
    """Simplicial cochain complex; ``faces[k]`` spans ``C^{start + k}`` and
    ``maps[k]`` is ``C^{start + k} -> C^{start + k + 1}``."""

    start: int
    faces: tuple
    maps: tuple
    reduced: bool

    def rank(self, j):
        k = j - self.start
        return len(self.faces[k]) if 0 <= k < len(self.faces) else 0


def coboundary(faces_lo, faces_hi):
    """Matrix of ``C^j -> C^{j+1}`` with the position-parity sign rule."""
    pos = {f: i for i, f in enumerate(faces_lo)}
    rows = []
    for g in faces_hi:
        row = [0] * len(faces_lo)
        for k in range(len(g)):
            f = g[:k] + g[k + 1:]
            i = pos.get(f)
            if i is not None:
                row[i] = -1 if k % 2 else 1
        rows.append(row)
    return IntMatrix.from_rows(rows, len(faces_lo))


def cochain_complex(K, reduced=False):
    if K.is_void():
        raise VoidComplex("the void complex has no cochain complex")
    start = -1 if reduced else 0
    faces = [K.faces(d) for d in range(start, K.dim + 1)]
    maps = [coboundary(faces[k], faces[k + 1]) for k in range(len(faces) - 1)]
    return CochainComplexZ(start, tuple(faces), tuple(maps), reduced)


def _with_tail(cc):
    last = len(cc.faces[-1]) if cc.faces else 0
    return list(cc.maps) + [IntMatrix.zeros(0, last)]


def cohomology_Z(K, reduced=False):
    """``{j: H^j}`` (reduced degrees start at -1); VOID gives ``{}``."""
    if K.is_void() or (not reduced and K.is_irrelevant()):
        return {}
    cc = cochain_complex(K, reduced)
    hs = complex_cohomology(_with_tail(cc))[:-1]
    return {cc.start + k: h for k, h in enumerate(hs)}


def homology_Z(K, reduced=False):
    """``{j: H_j}`` computed from the transposed coboundaries."""
    if K.is_void() or (not reduced and K.is_irrelevant()):
        return {}
    cc = cochain_complex(K, reduced)
    top = len(cc.faces[-1])
    maps = [IntMatrix.zeros(top, 0)] + [m.T for m in reversed(cc.maps)]
    hs = complex_cohomology(maps)[1:]
    top_degree = cc.start + len(cc.faces) - 1
    return {top_degree - k: h for k, h in enumerate(hs)}


def cohomology_with_coefficients(K, coeff):
    """``{j: GroupValue}`` for ``j = 0..dim``.

    ``coeff`` is either an integer ``m`` (cochains reduced mod m) or a
    field model (universal coefficients from integral homology).
    """
    from .fields import CyclicCoefficients, FieldModel, GroupValue
    from .abelian import coefficient_value

    if K.is_void():
        raise VoidComplex("the void complex has no cohomology")
    if isinstance(coeff, int):
        model = CyclicCoefficients(coeff)
        if K.is_irrelevant():
            return {}
        cc = cochain_complex(K)
        hs = complex_cohomology_mod(_with_tail(cc), coeff)[:-1]
        return {j: GroupValue.of_group(model, h) for j, h in enumerate(hs)}
    if not isinstance(coeff, FieldModel):
        raise TypeError("coefficients must be an int modulus or a FieldModel")
    hom = homology_Z(K)
    zero = FgAbelianGroup.zero()
    return {j: coefficient_value(hom.get(j, zero), hom.get(j - 1, zero), coeff)
            for j in range(K.dim + 1)}
