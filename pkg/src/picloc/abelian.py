"""Exact integer linear algebra: normal forms, subgroups and cohomology of
complexes of finitely generated free abelian groups.

Matrices act on column vectors, so an ``m x n`` matrix is a map
``Z^n -> Z^m``.  Everything is exact; there is no floating point here.
"""

from dataclasses import dataclass
from functools import reduce
from math import gcd

from . import kernels
from .errors import CompositionNonzero


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix with explicit shape (either side may be 0)."""

    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("column count needed for a matrix without rows")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries, rows=None, cols=None):
        entries = list(entries)
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        return cls(rows, cols, tuple(
            tuple(entries[i] if i == j and i < len(entries) else 0 for j in range(cols))
            for i in range(rows)))

    @classmethod
    def block(cls, blocks, row_sizes, col_sizes):
        """Assemble from a dict ``{(bi, bj): IntMatrix}``; missing blocks are 0."""
        roff = [0]
        for s in row_sizes:
            roff.append(roff[-1] + s)
        coff = [0]
        for s in col_sizes:
            coff.append(coff[-1] + s)
        out = [[0] * coff[-1] for _ in range(roff[-1])]
        for (bi, bj), m in blocks.items():
            if (m.rows, m.cols) != (row_sizes[bi], col_sizes[bj]):
                raise ValueError("block shape mismatch")
            for i, r in enumerate(m.data):
                target = out[roff[bi] + i]
                for j, x in enumerate(r):
                    if x:
                        target[coff[bj] + j] = x
        return cls.from_rows(out, coff[-1])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def tolist(self):
        return [list(r) for r in self.data]

    @property
    def T(self):
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.data[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self.data:
            acc = [0] * other.cols
            for j, a in enumerate(r):
                if a:
                    for k, b in enumerate(other.data[j]):
                        if b:
                            acc[k] += a * b
            out.append(tuple(acc))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k):
        return IntMatrix(self.rows, self.cols, tuple(tuple(k * x for x in r) for r in self.data))

    def apply(self, vec):
        return tuple(sum(a * b for a, b in zip(r, vec) if a) for r in self.data)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self):
        return all(not x for r in self.data for x in r)

    def mod(self, m):
        return IntMatrix(self.rows, self.cols, tuple(tuple(x % m for x in r) for r in self.data))

    def rank(self):
        if not self.rows or not self.cols:
            return 0
        _, d, _ = kernels.snf(self.data, self.rows, self.cols, False, False)
        return sum(1 for i in range(min(self.rows, self.cols)) if d[i][i])

    def determinant(self):
        """Exact determinant by fraction-free elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def dump(self):
        """One row per line, space-separated decimal integers."""
        return "".join(" ".join(str(x) for x in r) + "\n" for r in self.data)

    @classmethod
    def parse_dump(cls, text, cols=None):
        rows = [[int(x) for x in line.split()] for line in text.splitlines() if line.strip()]
        return cls.from_rows(rows, cols if cols is not None else (len(rows[0]) if rows else 0))


def _as_matrix(a):
    return a if isinstance(a, IntMatrix) else IntMatrix.from_rows(a)


def _normalize_orders(orders):
    """Invariant factors (each >= 2, dividing chain) of a sum of cyclic groups."""
    orders = [abs(int(d)) for d in orders if abs(int(d)) != 1]
    if any(d == 0 for d in orders):
        raise ValueError("order 0 is a free summand, not torsion")
    if not orders:
        return ()
    _, d, _ = kernels.snf(IntMatrix.diagonal(orders).data, len(orders), len(orders), False, False)
    return tuple(d[i][i] for i in range(len(orders)) if d[i][i] > 1)


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ...``."""

    free_rank: int = 0
    invariant_factors: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        f = tuple(self.invariant_factors)
        if any(d < 2 for d in f) or any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValueError(f"not an invariant factor chain: {f}")
        object.__setattr__(self, "invariant_factors", f)

    @classmethod
    def from_orders(cls, free_rank=0, orders=()):
        return cls(free_rank, _normalize_orders(orders))

    @classmethod
    def zero(cls):
        return cls(0, ())

    @classmethod
    def free(cls, rank):
        return cls(rank, ())

    @classmethod
    def cyclic(cls, d):
        """``Z/d``; ``d = 0`` gives ``Z``."""
        return cls(1, ()) if d == 0 else cls.from_orders(0, [d])

    def __add__(self, other):
        return FgAbelianGroup.from_orders(self.free_rank + other.free_rank,
                                          self.invariant_factors + other.invariant_factors)

    def is_zero(self):
        return self.free_rank == 0 and not self.invariant_factors

    def is_free(self):
        return not self.invariant_factors

    def order(self):
        """Cardinality, or ``None`` when infinite."""
        if self.free_rank:
            return None
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    def cyclic_summands(self):
        """Orders of the cyclic summands, 0 standing for ``Z``."""
        return [0] * self.free_rank + list(self.invariant_factors)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"

    def to_dict(self):
        return {"free_rank": self.free_rank, "torsion": list(self.invariant_factors)}

    @classmethod
    def from_dict(cls, d):
        return cls(d["free_rank"], tuple(d["torsion"]))


def hnf_rows(rows, ncols):
    """Canonical row Hermite normal form of the lattice spanned by ``rows``."""
    rows = [list(r) for r in rows]
    if not rows or not ncols:
        return []
    return kernels.hnf(rows, len(rows), ncols)


def coordinates_in(basis, vec):
    """Integer coordinates of ``vec`` in an echelon ``basis`` (rows), or None."""
    v = list(vec)
    coords = []
    for row in basis:
        c = next(j for j, x in enumerate(row) if x)
        if any(v[:c]):
            return None
        q, r = divmod(v[c], row[c])
        if r:
            return None
        coords.append(q)
        if q:
            for j in range(c, len(v)):
                v[j] -= q * row[j]
    return coords if not any(v) else None


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``Z^ambient_rank`` stored by its HNF basis."""

    ambient_rank: int
    basis: IntMatrix

    @classmethod
    def from_generators(cls, generators, ambient_rank):
        h = hnf_rows(generators, ambient_rank)
        return cls(ambient_rank, IntMatrix.from_rows(h, ambient_rank))

    @classmethod
    def full(cls, n):
        return cls(n, IntMatrix.identity(n))

    @classmethod
    def zero(cls, n):
        return cls(n, IntMatrix.zeros(0, n))

    @property
    def rank(self):
        return self.basis.rows

    def contains(self, vec):
        return coordinates_in(self.basis.data, vec) is not None

    def coordinates(self, vec):
        c = coordinates_in(self.basis.data, vec)
        if c is None:
            raise ValueError(f"{tuple(vec)} is not in the subgroup")
        return c

    def issubset(self, other):
        return all(other.contains(r) for r in self.basis.data)

    def quotient(self, sub):
        """``self / sub`` for a subgroup ``sub`` of ``self``."""
        rel = [self.coordinates(r) for r in sub.basis.data]
        m = IntMatrix.from_rows(rel, self.rank).T if rel else IntMatrix.zeros(self.rank, 0)
        return cokernel(m)


def smith_normal_form(a):
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` and ``U``, ``V`` unimodular."""
    a = _as_matrix(a)
    u, d, v = kernels.snf(a.data, a.rows, a.cols)
    return (IntMatrix.from_rows(u, a.rows), IntMatrix.from_rows(d, a.cols),
            IntMatrix.from_rows(v, a.cols))


def _diag(d, rows, cols):
    return [d[i][i] for i in range(min(rows, cols)) if d[i][i]]


def cokernel(a):
    """``Z^rows / (column span of A)``."""
    a = _as_matrix(a)
    if not a.rows:
        return FgAbelianGroup.zero()
    if not a.cols:
        return FgAbelianGroup.free(a.rows)
    _, d, _ = kernels.snf(a.data, a.rows, a.cols, False, False)
    diag = _diag(d, a.rows, a.cols)
    return FgAbelianGroup(a.rows - len(diag), tuple(x for x in diag if x > 1))


def kernel_basis(a):
    """Kernel of ``x -> A x`` as a Subgroup of ``Z^cols``."""
    a = _as_matrix(a)
    if not a.cols:
        return Subgroup.zero(0)
    if not a.rows:
        return Subgroup.full(a.cols)
    _, d, v = kernels.snf(a.data, a.rows, a.cols, False, True)
    r = len(_diag(d, a.rows, a.cols))
    gens = [[v[i][j] for i in range(a.cols)] for j in range(r, a.cols)]
    return Subgroup.from_generators(gens, a.cols)


def image_basis(a):
    """Literal image (column span) of ``A`` as a Subgroup of ``Z^rows``."""
    a = _as_matrix(a)
    return Subgroup.from_generators(a.T.data, a.rows)


def _check_composable(maps):
    for j in range(len(maps) - 1):
        d0, d1 = maps[j], maps[j + 1]
        if d0.rows != d1.cols:
            raise ValueError(f"d^{j} and d^{j + 1} are not composable")
        if d0.rows and not (d1 @ d0).is_zero():
            raise CompositionNonzero(f"d^{j + 1} d^{j} is not zero")


def complex_cohomology(maps):
    """Cohomology ``H^0 .. H^{p+1}`` of ``C^0 -d^0-> C^1 -> ... -d^p-> C^{p+1}``."""
    maps = [_as_matrix(m) for m in maps]
    if not maps:
        return []
    _check_composable(maps)
    dims = [maps[0].cols] + [m.rows for m in maps]
    out = []
    for j, a in enumerate(dims):
        if j < len(maps):
            ker = kernel_basis(maps[j]) if a else Subgroup.zero(0)
        else:
            ker = Subgroup.full(a)
        if j == 0 or not ker.rank:
            out.append(FgAbelianGroup.free(ker.rank))
            continue
        prev = maps[j - 1]
        cols = [ker.coordinates(c) for c in prev.T.data]
        rel = IntMatrix.from_rows(cols, ker.rank).T if cols else IntMatrix.zeros(ker.rank, 0)
        out.append(cokernel(rel))
    return out


def complex_cohomology_mod(maps, m):
    """Cohomology of the complex tensored with ``Z/m``, computed on cochains."""
    maps = [_as_matrix(x) for x in maps]
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if not maps:
        return []
    _check_composable(maps)
    dims = [maps[0].cols] + [x.rows for x in maps]
    out = []
    for j, a in enumerate(dims):
        if not a:
            out.append(FgAbelianGroup.zero())
            continue
        # cocycles mod m, lifted to Z^a: {x : d x in m Z^b}
        if j < len(maps) and maps[j].rows:
            d = maps[j]
            b = d.rows
            aug = IntMatrix.from_rows(
                [list(d.data[i]) + [-m if k == i else 0 for k in range(b)] for i in range(b)],
                a + b)
            k = kernel_basis(aug)
            lift = Subgroup.from_generators([r[:a] for r in k.basis.data], a)
        else:
            lift = Subgroup.full(a)
        gens = [[m if i == t else 0 for i in range(a)] for t in range(a)]
        if j > 0:
            gens += [list(c) for c in maps[j - 1].T.data]
        rel = [lift.coordinates(g) for g in gens]
        out.append(cokernel(IntMatrix.from_rows(rel, lift.rank).T))
    return out


def coefficient_value(h, source, model):
    """``Hom(h, K*) + Ext(source, K*)`` evaluated under a field model."""
    from .fields import GroupValue

    return GroupValue.from_uct(h, source, model)
