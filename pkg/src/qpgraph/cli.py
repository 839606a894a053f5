"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 malformed input, 3 precondition violation.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algebra, spectral, walkpart
from .errors import PreconditionError
from .graph import (
    DisconnectedGraphError,
    FAMILIES,
    Graph,
    GraphError,
    format_edge_list,
    from_spec,
    read_edge_list,
)
from .report import analyze

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def sub(i: int) -> str:
    return str(i).translate(_SUB)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def load_graph(arg: str) -> Graph:
    if arg.startswith("gen:"):
        return from_spec(arg[4:])
    path = Path(arg)
    if not path.is_file():
        raise GraphError(f"no such edge-list file: {arg}")
    return read_edge_list(path)


def gen_spec(family: str, params: list[str]) -> str:
    if "(" in family or not params:
        return family
    if family == "circulant" and len(params) >= 2 and not params[1].startswith("{"):
        params = [params[0], "{" + ",".join(params[1:]) + "}"]
    return f"{family}({','.join(params)})"


def format_matrix(rows) -> str:
    cells = [[str(x) for x in r] for r in rows]
    if not cells:
        return ""
    w = max(len(c) for r in cells for c in r)
    return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)


def _array_text(arr) -> str:
    b, c = arr
    return "{" + ",".join(map(str, b)) + ";" + ",".join(map(str, c)) + "}"


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------

def cmd_gen(args, out) -> int:
    g = from_spec(gen_spec(args.family, args.params))
    text = format_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_eigcount(args, out) -> int:
    g = load_graph(args.graph)
    print(spectral.count_distinct_eigenvalues(g.adjacency, integer_only=args.integer), file=out)
    return EXIT_OK


def cmd_drg(args, out) -> int:
    g = load_graph(args.graph)
    v = spectral.is_distance_regular(g, normalize=not args.unnormalized)
    print(f"distance-regular: {'yes' if v.is_drg else 'no'}", file=out)
    print(f"reason: {v.reason.value}" + ("" if v.k is None else f" (k={v.k})"), file=out)
    if v.intersection_array is not None:
        print(f"intersection array: {_array_text(v.intersection_array)}", file=out)
    return EXIT_OK


def cmd_basis(args, out) -> int:
    g = load_graph(args.graph)
    res = algebra.standard_basis(g)
    if isinstance(res, algebra.ClosureFailure):
        print("Hadamard-closed: no", file=out)
        w = res.witness
        if isinstance(w, algebra.NonBinaryEntry):
            print(f"witness: echelon row {w.index} has entry {w.value} at ({w.row},{w.col})",
                  file=out)
        else:
            print(f"witness: F{sub(w.i)}∘F{sub(w.j)} lies outside the span", file=out)
        return EXIT_OK
    print("Hadamard-closed: yes", file=out)
    print(f"d+1 = {res.d + 1}, identity is F{sub(res.identity_index)}", file=out)
    sizes, dists = res.sizes(), res.distances()
    for i in res.distance_order():
        line = f"F{sub(i)}: distance {dists[i]}, |P(x)| = {sizes[i]}"
        if args.polys:
            p = res.polynomials[i]
            coeffs = ", ".join(str(c) for c in p.coeffs)
            line += f"\n    p{sub(i)}(t) = {p}    [{coeffs}]"
        print(line, file=out)
    return EXIT_OK


def cmd_walkpart(args, out) -> int:
    g = load_graph(args.graph)
    wp = walkpart.walk_partition(g)
    qp, _ = walkpart.is_quotient_polynomial(g, wp)
    print(f"d = {wp.d}, r = {wp.r}, quotient-polynomial: {'yes' if qp else 'no'}", file=out)
    print("classes:", file=out)
    for j, c in enumerate(wp.classes):
        print(f"  M{sub(j)}: distance {c.distance}, {len(c.pairs)} pairs, walks {c.vector}",
              file=out)
    print("W =", file=out)
    print(format_matrix(wp.W.tolist()), file=out)
    print("Z =", file=out)
    print(format_matrix(wp.Z.tolist()), file=out)
    for i, p in enumerate(wp.polys):
        print(f"p{sub(i)}(t) = {p}", file=out)
    return EXIT_OK


def cmd_distpoly(args, out) -> int:
    g = load_graph(args.graph)
    for e in walkpart.distance_matrix_polynomials(g):
        if e.polynomial is None:
            print(f"A{sub(e.distance)} = (not a polynomial in A)", file=out)
        else:
            terms = " + ".join(f"p{sub(k)}" for k in e.terms)
            print(f"A{sub(e.distance)} = {terms} = {e.polynomial}", file=out)
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    g = load_graph(args.graph)
    rep = analyze(g)
    if args.json:
        print(rep.to_json(), file=out)
        return EXIT_OK
    meta = rep.graph
    print(f"graph {meta['name'] or '(unnamed)'}: n={meta['n']} m={meta['m']} "
          f"k={meta['regular_k']} D={meta['diameter']}", file=out)
    print(f"distinct eigenvalues: {rep.eigenvalue_count}", file=out)
    for note in rep.notes:
        print(f"note: {note}", file=out)
    if rep.drg is None:
        return EXIT_OK
    drg = rep.drg
    line = f"distance-regular: {'yes' if drg['is_drg'] else 'no'} ({drg['reason']})"
    if drg["intersection_array"]:
        ia = drg["intersection_array"]
        line += f" {_array_text((ia['b'], ia['c']))}"
    print(line, file=out)
    qp = rep.quotient_polynomial
    print(f"quotient-polynomial: {'yes' if qp['value'] else 'no'} (d={qp['d']}, r={qp['r']})",
          file=out)
    sb = rep.standard_basis
    if sb["applicable"] and sb["closed"]:
        for i in sb["distance_order"]:
            print(f"  p{sub(i)}(t) = {sb['polynomials'][i]['text']}", file=out)
    for e in rep.distance_polynomials:
        txt = e["polynomial"]["text"] if e["polynomial"] else "not polynomial"
        print(f"A{sub(e['distance'])}: {txt}", file=out)
    if rep.hoffman:
        print(f"Hoffman polynomial: {rep.hoffman['text']}", file=out)
    dg = rep.diagram
    if dg["common"]:
        print(f"common diagram: {dg['r_plus_1']} cells, sizes {dg['sizes']}, "
              f"rank(P) = {dg['rank_P']}", file=out)
    else:
        print("common diagram: none", file=out)
    if rep.diameter2_four_eigenvalues != "NotApplicable":
        print(f"diameter-2 four-eigenvalue case: {rep.diameter2_four_eigenvalues}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qpgraph", description="Exact analysis of adjacency algebras of graphs.")
    sp = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    graph_help = "edge-list file or gen:<spec>, e.g. gen:circulant(7,{1,2})"

    g = sp.add_parser("gen", help="emit an edge list")
    g.add_argument("family", help="one of " + ", ".join(FAMILIES) + " or a full spec")
    g.add_argument("params", nargs="*")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    e = sp.add_parser("eigcount", help="number of distinct eigenvalues")
    e.add_argument("graph", help=graph_help)
    e.add_argument("--integer", action="store_true", help="division-free integer recurrence")
    e.set_defaults(func=cmd_eigcount)

    d = sp.add_parser("drg", help="distance-regularity via predistance matrices")
    d.add_argument("graph", help=graph_help)
    d.add_argument("--unnormalized", action="store_true")
    d.set_defaults(func=cmd_drg)

    b = sp.add_parser("basis", help="standard 0-1 basis or a closure-failure witness")
    b.add_argument("graph", help=graph_help)
    b.add_argument("--polys", action="store_true", help="print p_i coefficients")
    b.set_defaults(func=cmd_basis)

    w = sp.add_parser("walkpart", help="walk-regular partition, W, Z and polynomials")
    w.add_argument("graph", help=graph_help)
    w.set_defaults(func=cmd_walkpart)

    q = sp.add_parser("distpoly", help="distance matrices as polynomials in A")
    q.add_argument("graph", help=graph_help)
    q.set_defaults(func=cmd_distpoly)

    a = sp.add_parser("analyze", help="full report")
    a.add_argument("graph", help=graph_help)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (PreconditionError, DisconnectedGraphError) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"input: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
