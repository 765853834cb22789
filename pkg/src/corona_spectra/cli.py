"""Command-line interface.

Graphs are given as ``family:params`` strings (``cycle:5``, ``complete:4``,
``circulant:9:1,2``, ``cycle:3+cycle:3``) or as ``.g6`` / ``.el`` files.
Output is JSON on stdout unless ``--format csv`` is given. Exit status is
0 on success, 1 on a computation error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import invariants as inv
from .errors import CoronaError
from .graph import Graph, MatrixKind, matrix_of, resolve_graph, serialize_graph, to_graph6
from .poly import charpoly_and_adjugate_sum, coronal_of
from .product import closed_neighborhood_corona, product_counts
from .spectra import direct_spectrum, formula_spectrum
from .suite import run_verify_suite, sig12


class UsageError(Exception):
    pass


def _graph(source: str) -> Graph:
    try:
        return resolve_graph(source)
    except (CoronaError, OSError, ValueError) as exc:
        raise UsageError(f"cannot read graph {source!r}: {exc}") from None


def _poly_json(p) -> dict:
    return {"coefficients": list(p.coeffs), "text": str(p)}


def cmd_product(args) -> str:
    g = closed_neighborhood_corona(_graph(args.g1), _graph(args.g2))
    text = serialize_graph(g, args.format)
    if args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text)
        return None
    return text


def cmd_counts(args):
    c = product_counts(_graph(args.g1), _graph(args.g2))
    return {"vertices": c.vertices, "edges": c.edges}


def cmd_spectrum(args):
    g1, g2 = _graph(args.g1), _graph(args.g2)
    fn = formula_spectrum if args.method == "formula" else direct_spectrum
    return [sig12(v) for v in fn(g1, g2, args.kind)]


def cmd_coronal(args):
    dec = coronal_of(matrix_of(_graph(args.graph), args.kind))
    return {
        "numerator": _poly_json(dec.numerator),
        "denominator": _poly_json(dec.denominator),
        "cofactor": _poly_json(dec.cofactor),
        "d": dec.d,
    }


def cmd_charpoly(args):
    f, adj = charpoly_and_adjugate_sum(matrix_of(_graph(args.graph), args.kind))
    return {"charpoly": _poly_json(f), "adjugate_sum": _poly_json(adj)}


def cmd_kirchhoff(args):
    g1, g2 = _graph(args.g1), _graph(args.g2)
    out = {}
    if args.method in (None, "formula"):
        out["formula"] = sig12(inv.kirchhoff_formula(g1, g2))
    if args.method in (None, "direct"):
        out["direct"] = sig12(inv.kirchhoff_direct(closed_neighborhood_corona(g1, g2)))
    return out


def cmd_spanning_trees(args):
    g1, g2 = _graph(args.g1), _graph(args.g2)
    return {
        "formula": inv.spanning_trees_formula(g1, g2),
        "direct": inv.spanning_trees_direct(closed_neighborhood_corona(g1, g2)),
    }


def cmd_energy(args):
    return {"energy": sig12(inv.graph_energy(_graph(args.graph)))}


def cmd_cospectral(args):
    return {"cospectral": inv.check_cospectral(_graph(args.ga), _graph(args.gb), args.kind)}


def cmd_integral(args):
    ok, roots = inv.check_integral(_graph(args.graph))
    return {"integral": ok, "integer_eigenvalues": roots}


def cmd_equienergetic(args):
    pair = inv.equienergetic_product_pair(_graph(args.g), _graph(args.g1), _graph(args.g2))
    return {
        "product_a": to_graph6(pair.product_a),
        "product_b": to_graph6(pair.product_b),
        "energy_a": sig12(pair.energy_a),
        "energy_b": sig12(pair.energy_b),
        "charpoly_a": list(pair.charpoly_a.coeffs),
        "charpoly_b": list(pair.charpoly_b.coeffs),
    }


def cmd_verify(args):
    report = run_verify_suite(args.seed, args.n1_max, args.n2_max, args.pairs)
    print(f"verify: {report.pass_count} passed, {report.fail_count} failed "
          f"in {report.wall_time:.2f}s", file=sys.stderr)
    args.exit_status = 0 if report.fail_count == 0 else 1
    if args.format == "csv":
        return report.entries
    return report.to_dict()


def _kind(text: str) -> MatrixKind:
    try:
        return MatrixKind.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown matrix kind {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="corona-spectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p, choices=("json", "csv")):
        p.add_argument("--format", choices=choices, default=choices[0])
        return p

    p = sub.add_parser("product", help="build G1 [x] G2")
    p.add_argument("g1"), p.add_argument("g2")
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=("el", "g6", "dot"), default="el")
    p.set_defaults(func=cmd_product)

    p = with_format(sub.add_parser("counts", help="closed-form order and size"))
    p.add_argument("g1"), p.add_argument("g2")
    p.set_defaults(func=cmd_counts)

    p = with_format(sub.add_parser("spectrum", help="product spectrum"))
    p.add_argument("--kind", type=_kind, default=MatrixKind.ADJACENCY)
    p.add_argument("--method", choices=("formula", "direct"), default="formula")
    p.add_argument("g1"), p.add_argument("g2")
    p.set_defaults(func=cmd_spectrum)

    for name, func, helptext in (("coronal", cmd_coronal, "reduced coronal of a graph"),
                                 ("charpoly", cmd_charpoly, "exact characteristic polynomial")):
        p = with_format(sub.add_parser(name, help=helptext))
        p.add_argument("--kind", type=_kind, default=MatrixKind.ADJACENCY)
        p.add_argument("graph")
        p.set_defaults(func=func)

    p = with_format(sub.add_parser("kirchhoff", help="Kirchhoff index of the product"))
    p.add_argument("g1"), p.add_argument("g2")
    p.add_argument("--method", choices=("formula", "direct"), default=None)
    p.set_defaults(func=cmd_kirchhoff)

    p = with_format(sub.add_parser("spanning-trees", help="spanning tree count of the product"))
    p.add_argument("g1"), p.add_argument("g2")
    p.set_defaults(func=cmd_spanning_trees)

    p = with_format(sub.add_parser("energy", help="graph energy"))
    p.add_argument("graph")
    p.set_defaults(func=cmd_energy)

    p = with_format(sub.add_parser("cospectral", help="exact cospectrality test"))
    p.add_argument("--kind", type=_kind, default=MatrixKind.ADJACENCY)
    p.add_argument("ga"), p.add_argument("gb")
    p.set_defaults(func=cmd_cospectral)

    p = with_format(sub.add_parser("integral", help="exact integrality test"))
    p.add_argument("graph")
    p.set_defaults(func=cmd_integral)

    p = with_format(sub.add_parser("equienergetic-pair", help="G [x] G1 and G [x] G2"))
    p.add_argument("g"), p.add_argument("g1"), p.add_argument("g2")
    p.set_defaults(func=cmd_equienergetic)

    p = with_format(sub.add_parser("verify", help="formula-vs-oracle suite"))
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--n1-max", type=int, default=6)
    p.add_argument("--n2-max", type=int, default=5)
    p.add_argument("--pairs", type=int, default=100)
    p.set_defaults(func=cmd_verify)
    return parser


def _to_csv(result) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(result, dict):
        flat = {k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in result.items()}
        writer.writerow(flat.keys())
        writer.writerow(flat.values())
    elif result and isinstance(result[0], dict):
        writer.writerow(result[0].keys())
        for row in result:
            writer.writerow(json.dumps(v) if isinstance(v, (dict, list)) else v
                            for v in row.values())
    else:
        writer.writerow(["value"])
        for v in result:
            writer.writerow([v])
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n1_max", 1) < 1 or getattr(args, "n2_max", 1) < 1:
        parser.error("--n1-max and --n2-max must be >= 1")
    args.exit_status = 0
    try:
        result = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except CoronaError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1
    if result is None:
        return args.exit_status
    if isinstance(result, str):
        sys.stdout.write(result)
    elif getattr(args, "format", "json") == "csv":
        sys.stdout.write(_to_csv(result))
    else:
        sys.stdout.write(json.dumps(result, indent=1) + "\n")
    return args.exit_status


if __name__ == "__main__":
    sys.exit(main())
