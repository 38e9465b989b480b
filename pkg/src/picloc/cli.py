"""Command-line interface.

Exit status: 0 on success, 1 when the input is well formed but outside what
the engine accepts (torsion, non-simplicial, ...), 2 on I/O or parse errors.
"""

import argparse
import json
import logging
import os
import sys

from . import BACKEND, __version__
from .binoid import detect_simplicial, reduction
from .errors import (Disconnected, DomainError, MixedPresentation, NotAGraph,
                     NotSimplicialError, ParseError)
from .fields import parse_field
from .formats import parse_box, parse_facets, parse_ideal, parse_presentation
from .monomial import nonreduced_report, nonzero_entries, table_to_dict
from .picard import (crosscheck_simplicial, graph_fast_path, graph_graded_report,
                     picloc_integral_binoid, picloc_simplicial_direct, picloc_simplicial_formula,
                     stanley_reisner_cohomology)

log = logging.getLogger("picloc")


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not UTF-8 text") from None


def _pretty_report(report):
    lines = [f"{report.kind} ({report.provenance})"]
    if report.chain_ranks:
        lines.append("chain ranks: " + " ".join(str(r) for r in report.chain_ranks))
    width = max([len(e.describe()) for e in report.degrees] + [5])
    has_field = any(e.field is not None for e in report.degrees)
    head = f"{'j':>3}  {'H^j':<{width}}"
    if has_field:
        head += "  combinatorial / field"
    lines.append(head.rstrip())
    for e in report.degrees:
        row = f"{e.j:>3}  {e.describe():<{width}}"
        if has_field:
            row += f"  {e.combinatorial} / {e.field}"
        lines.append(row.rstrip())
        nz = {v: g for v, g in e.per_vertex.items() if not g.is_zero()}
        if nz:
            lines.append("       per vertex: " + ", ".join(f"{v}: {g}" for v, g in nz.items()))
    for k, v in report.extra.items():
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


def _emit(args, payload, pretty):
    if args.output == "pretty":
        print(pretty)
    else:
        print(json.dumps(payload, indent=2))


def _cmd_simplicial(args):
    K = parse_facets(_read(args.input))
    fn = picloc_simplicial_direct if args.method == "direct" else picloc_simplicial_formula
    r = fn(K)
    _emit(args, r.to_dict(), _pretty_report(r))


def _cmd_crosscheck(args):
    K = parse_facets(_read(args.input))
    r = crosscheck_simplicial(K)
    _emit(args, r.to_dict(), _pretty_report(r))


def _cmd_binoid(args):
    P = parse_presentation(_read(args.input))
    log.info("presentation %s", P)
    if P.congruences and P.infinities:
        raise MixedPresentation(
            f"{P} mixes congruences and infinity relations; only integral or semifree "
            "presentations are supported")
    if P.infinities:
        K = detect_simplicial(P)
        if not K:
            R = reduction(P)
            log.info("%s; using the reduction %s", K.reason, R)
            K = detect_simplicial(R)
            if not K:
                raise NotSimplicialError(K.reason)
        r = crosscheck_simplicial(K)
    else:
        r = picloc_integral_binoid(P, args.cover)
    _emit(args, r.to_dict(), _pretty_report(r))


def _cmd_stanley_reisner(args):
    K = parse_facets(_read(args.input))
    r = stanley_reisner_cohomology(K, parse_field(args.field))
    _emit(args, r.to_dict(), _pretty_report(r))


def _cmd_graph(args):
    K = parse_facets(_read(args.input))
    s, r = graph_fast_path(K)
    graded = None
    try:
        graded = graph_graded_report(K)
    except (Disconnected, NotAGraph) as exc:
        log.info("no graded rank sequence: %s", exc)
    payload = {"s": s, "r": r,
               "degrees": [{"j": 0, "free_rank": s, "torsion": []},
                           {"j": 1, "free_rank": r, "torsion": []}],
               "graded": None if graded is None else {
                   "ranks": list(graded.as_tuple()), "identity": graded.identity}}
    pretty = [f"s = {s}", f"r = {r}", f"H^0 = Z^{s}", f"H^1 = Z^{r}"]
    if graded is not None:
        pretty.append("graded ranks: " + " ".join(map(str, graded.as_tuple()))
                      + f" (identity {'holds' if graded.identity else 'FAILS'})")
    _emit(args, payload, "\n".join(pretty))


def _cmd_monomial(args):
    I, labels = parse_ideal(_read(args.input))
    model = parse_field(args.field)
    box = parse_box(args.box, I.n)
    report, table, excluded = nonreduced_report(I, model, box, labels, args.jobs)
    payload = {"reduced": None if report is None else report.to_dict(),
               "excluded_vertices": excluded,
               "nilpotent": {"box": [list(box.lower), list(box.upper)],
                             "table": table_to_dict(table)}}
    pretty = [_pretty_report(report) if report is not None else "reduced complex is empty",
              f"excluded vertices: {' '.join(excluded) or '-'}",
              "nilpotent term (nonzero degrees; dims of H^0..H^{n-1}):"]
    nz = nonzero_entries(table)
    pretty += [f"  {a}: {d}" for a, d in sorted(nz.items())] or ["  none"]
    _emit(args, payload, "\n".join(pretty))


def build_parser():
    p = argparse.ArgumentParser(prog="picloc", description=(
        "Local Picard groups and unit-sheaf cohomology of binoids and "
        "Stanley-Reisner algebras."))
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND})")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, field=False):
        sp.add_argument("input", help="input file, or - for standard input")
        sp.add_argument("--output", choices=["json", "pretty"], default="json")
        sp.add_argument("--pretty", dest="output", action="store_const", const="pretty")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        if field:
            sp.add_argument("--field", required=True,
                            help="q=<prime power> | Qbar | Cstar | R | Q | symbolic")

    sp = sub.add_parser("simplicial", help="unit-sheaf cohomology of a simplicial binoid")
    common(sp)
    sp.add_argument("--method", choices=["direct", "formula"], default="direct")
    sp.set_defaults(func=_cmd_simplicial)

    sp = sub.add_parser("crosscheck", help="run both simplicial pipelines and compare")
    common(sp)
    sp.set_defaults(func=_cmd_crosscheck)

    sp = sub.add_parser("binoid", help="cohomology from a binoid presentation (JSON)")
    common(sp)
    sp.add_argument("--cover", choices=["coordinate", "extremal"], default="coordinate")
    sp.set_defaults(func=_cmd_binoid)

    sp = sub.add_parser("stanley-reisner", help="cohomology of units of K[complex]")
    common(sp, field=True)
    sp.set_defaults(func=_cmd_stanley_reisner)

    sp = sub.add_parser("graph", help="isolated vertices s and Picard rank r of a graph")
    common(sp)
    sp.set_defaults(func=_cmd_graph)

    sp = sub.add_parser("monomial", help="non-reduced monomial quotient with nilpotent term")
    common(sp, field=True)
    sp.add_argument("--box", default="-2:2", help="lo:hi or lo:hi,lo:hi,... per variable")
    sp.set_defaults(func=_cmd_monomial)
    return p


def _setup_logging():
    level = os.environ.get("PICLOC_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="picloc: %(levelname)s: %(message)s", stream=sys.stderr)


def main(argv=None):
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DomainError as exc:
        print(f"picloc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"picloc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
