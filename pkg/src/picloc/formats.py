"""Readers for facet files, presentation files, ideal files and degree boxes."""

import json

from .binoid import BinoidPresentation
from .errors import ParseError
from .monomial import DegreeBox, MonomialIdeal
from .simplicial import SimplicialComplex


def _lines(text):
    for num, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line


def parse_facets(text, require_singletons=True):
    """One facet per line; an optional first line ``vertices: a b c`` fixes
    the vertex order, otherwise first appearance decides."""
    vertices = None
    facets = []
    for num, line in _lines(text):
        if line.lower().startswith("vertices:"):
            if vertices is not None or facets:
                raise ParseError(f"line {num}: 'vertices:' must come before any facet")
            vertices = line.split(":", 1)[1].split()
            if len(set(vertices)) != len(vertices):
                raise ParseError(f"line {num}: repeated vertex label")
            continue
        facets.append(line.split())
    if vertices is None:
        vertices = []
        for f in facets:
            for v in f:
                if v not in vertices:
                    vertices.append(v)
    if not facets and not vertices:
        raise ParseError("no facets given")
    return SimplicialComplex.from_facets(vertices, facets, require_singletons)


def _vector(x, n, what):
    if not isinstance(x, list) or len(x) != n or not all(
            isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in x):
        raise ParseError(f"{what}: expected a list of {n} nonnegative integers, got {x!r}")
    return tuple(x)


def parse_presentation(text):
    """JSON object with ``generators``, ``congruences`` and ``infinities``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "generators" not in data:
        raise ParseError("presentation must be an object with a 'generators' list")
    unknown = set(data) - {"generators", "congruences", "infinities", "name"}
    if unknown:
        raise ParseError(f"unknown presentation fields {sorted(unknown)}")
    gens = data["generators"]
    if not isinstance(gens, list) or not gens or not all(isinstance(g, str) for g in gens):
        raise ParseError("'generators' must be a nonempty list of labels")
    if len(set(gens)) != len(gens):
        raise ParseError("repeated generator label")
    n = len(gens)
    cong = []
    for k, rel in enumerate(data.get("congruences", [])):
        if not isinstance(rel, list) or len(rel) != 2:
            raise ParseError(f"congruence {k}: expected a pair of exponent vectors")
        a = _vector(rel[0], n, f"congruence {k}")
        b = _vector(rel[1], n, f"congruence {k}")
        cong.append((a, b))
    inf = [_vector(h, n, f"infinity {k}") for k, h in enumerate(data.get("infinities", []))]
    try:
        return BinoidPresentation(tuple(gens), tuple(cong), tuple(inf))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_ideal(text):
    """One generator per line as exponents; optional ``variables: x y`` header."""
    labels = None
    gens = []
    for num, line in _lines(text):
        if line.lower().startswith("variables:"):
            labels = line.split(":", 1)[1].split()
            continue
        try:
            gens.append(tuple(int(x) for x in line.split()))
        except ValueError:
            raise ParseError(f"line {num}: exponents must be integers") from None
    if labels is None and not gens:
        raise ParseError("no generators and no 'variables:' line")
    n = len(labels) if labels is not None else len(gens[0])
    for g in gens:
        if len(g) != n:
            raise ParseError(f"generator {g} does not have {n} exponents")
    try:
        return MonomialIdeal(n, tuple(gens)), labels
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_box(spec, n):
    """``lo:hi`` for every variable, or a comma-separated list of ``lo:hi``."""
    parts = spec.split(",")
    if len(parts) == 1:
        parts = parts * n
    if len(parts) != n:
        raise ParseError(f"box has {len(parts)} ranges for {n} variables")
    lo, hi = [], []
    for p in parts:
        try:
            a, b = p.split(":")
            lo.append(int(a))
            hi.append(int(b))
        except ValueError:
            raise ParseError(f"bad range {p!r}; expected lo:hi") from None
    try:
        return DegreeBox(tuple(lo), tuple(hi))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
