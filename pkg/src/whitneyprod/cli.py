"""Command-line surface: construct, transform, measure, verify, export.

Graph sources are file paths, "-" for stdin, or "named:NAME[:P1,P2,...]".
Machine output is one JSON object per line with exact fractions as
strings; --pretty switches to aligned tables, --approx adds floats.
Exit codes: 0 ok, 1 verification failure, 2 input error, 3 size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import derham, homology, product, topology
from .graphs import (
    Graph,
    euler_characteristic,
    f_vector,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    join,
    named,
    suspension,
)
from .limits import Limits

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class InputError(ValueError):
    pass


def load_graph(source: str | None) -> Graph:
    if source is None or source == "-":
        text = sys.stdin.read()
        try:
            return graph_from_json(text)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if source.startswith("named:"):
        parts = source.split(":")
        name = parts[1] if len(parts) > 1 else ""
        params = []
        if len(parts) > 2 and parts[2]:
            try:
                params = [int(x) for x in parts[2].split(",")]
            except ValueError as exc:
                raise InputError(f"bad parameters in {source!r}") from exc
        try:
            return named(name, params)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return graph_from_json(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {source!r}: {exc}") from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _fmt(value, approx: bool):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_fmt(v, approx) for v in value]
    return value


def emit(payload: dict, args) -> None:
    if args.approx:
        extras = {}
        for key, value in payload.items():
            if isinstance(value, Fraction):
                extras[f"{key}_approx"] = float(value)
        payload = {**payload, **extras}
    payload = {k: _fmt(v, args.approx) for k, v in payload.items()}
    if args.pretty:
        width = max(len(k) for k in payload)
        for k, v in payload.items():
            if isinstance(v, list):
                v = ", ".join(str(x) for x in v)
            print(f"{k.ljust(width)} : {v}")
    else:
        print(json.dumps(payload, separators=(",", ":")))


def _graph_payload(g: Graph) -> dict:
    return json.loads(graph_to_json(g))


def run(args) -> int:
    limits = Limits(args.max_product_vertices, args.max_recursion_vertices)
    verb = args.verb

    if verb == "new":
        emit(_graph_payload(load_graph(args.graph)), args)
        return EXIT_OK

    if verb == "product":
        factors = [load_graph(s) for s in args.graphs]
        p = product.graph_product_n(factors, limits)
        if args.metadata:
            emit({
                "factors": [list(g.labels) for g in p.factors],
                "provenance": [[list(s) for s in prov] for prov in p.provenance],
                "f_vector": list(f_vector(p.graph)),
                "euler": euler_characteristic(p.graph),
                "dim": topology.inductive_dimension(p.graph).total,
            }, args)
        else:
            emit(_graph_payload(p.graph), args)
        return EXIT_OK

    if verb == "enhance":
        g = load_graph(args.graph)
        emit(_graph_payload(product.enhance(g, limits).graph), args)
        return EXIT_OK

    if verb == "refine":
        g = load_graph(args.graph)
        report = product.refine_sequence(g, args.steps, limits)
        payload = {
            "steps": [
                {"dim": str(s.dim), "f_vector": list(s.f_vector), "euler": s.euler}
                for s in report.steps
            ],
            "truncated": report.truncated,
        }
        emit(payload, args)
        return EXIT_CAP if report.truncated else EXIT_OK

    if verb == "join":
        emit(_graph_payload(join(load_graph(args.graphs[0]),
                                 load_graph(args.graphs[1]))), args)
        return EXIT_OK

    if verb == "suspend":
        emit(_graph_payload(suspension(load_graph(args.graph))), args)
        return EXIT_OK

    if verb == "betti":
        emit({"betti": list(homology.betti(load_graph(args.graph)))}, args)
        return EXIT_OK

    if verb == "poincare":
        poly = homology.poincare_polynomial(load_graph(args.graph))
        emit({"poincare": list(poly.coefficients)}, args)
        return EXIT_OK

    if verb == "dim":
        rep = topology.inductive_dimension(load_graph(args.graph))
        emit({"dim": rep.total}, args)
        return EXIT_OK

    if verb == "euler":
        g = load_graph(args.graph)
        emit({"euler": euler_characteristic(g), "f_vector": list(f_vector(g))}, args)
        return EXIT_OK

    if verb == "curvature":
        rep = topology.curvature(load_graph(args.graph))
        emit({"curvature": list(rep.per_vertex), "total": rep.total}, args)
        return EXIT_OK

    if verb == "chromatic":
        if len(args.graphs) == 2:
            value = topology.product_chromatic(load_graph(args.graphs[0]),
                                               load_graph(args.graphs[1]))
        else:
            g = load_graph(args.graphs[0] if args.graphs else None)
            value = topology.chromatic_number_exact(g)
        emit({"chromatic": value}, args)
        return EXIT_OK

    if verb == "contractible":
        g = load_graph(args.graph)
        result = topology.contractible(
            g, max_vertices=limits.max_recursion_vertices)
        emit({"contractible": "unknown" if result is None else result}, args)
        return EXIT_OK

    if verb == "sphere-check":
        g = load_graph(args.graph)
        result = topology.is_sphere(
            g, args.dim, max_vertices=limits.max_recursion_vertices)
        emit({"sphere": "unknown" if result is None else result,
              "dim": args.dim}, args)
        return EXIT_OK

    if verb == "kunneth":
        rep = homology.kunneth_check(load_graph(args.graphs[0]),
                                     load_graph(args.graphs[1]), limits)
        emit({"lhs": list(rep.factor_product),
              "rhs": list(rep.product_betti), "ok": rep.ok}, args)
        return EXIT_OK if rep.ok else EXIT_VERIFY

    if verb == "derham-check":
        g, h = load_graph(args.graphs[0]), load_graph(args.graphs[1])
        tc = derham.tensor_complex(g, h)
        squares = all(
            (tc.derivative_matrices[k + 1] @ tc.derivative_matrices[k]).is_zero()
            for k in range(len(tc.derivative_matrices) - 1)
        )
        db = derham.derham_betti(g, h)
        wb = homology.betti(product.graph_product(g, h, limits).graph)
        cm = derham.chain_map_check(g, h, limits)
        ok = squares and cm.ok and list(db) == list(wb)
        emit({
            "tensor_dims": [tc.dim(k) for k in range(len(tc.basis_by_degree))],
            "derivative_squares_to_zero": squares,
            "derham_betti": list(db),
            "whitney_betti": list(wb),
            "chain_map_ok": cm.ok,
            "ok": ok,
        }, args)
        return EXIT_OK if ok else EXIT_VERIFY

    if verb == "export":
        g = load_graph(args.graph)
        if args.format == "dot":
            sys.stdout.write(graph_to_dot(g))
        elif args.format == "json":
            print(graph_to_json(g))
        else:  # triplet: incidence matrix d_k
            c = homology.oriented_complex(g)
            mats = homology.incidence_matrices(c)
            if not 0 <= args.grade < len(mats):
                raise InputError(f"no incidence matrix at grade {args.grade}")
            sys.stdout.write(mats[args.grade].to_triplet_text())
        return EXIT_OK

    raise InputError(f"unknown verb {verb!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whitneyprod",
        description="Simplicial graph products and their exact invariants")
    parser.add_argument("--pretty", action="store_true",
                        help="human-readable aligned output")
    parser.add_argument("--approx", action="store_true",
                        help="add floating approximations next to fractions")
    parser.add_argument("--max-product-vertices", type=int, default=20000)
    parser.add_argument("--max-recursion-vertices", type=int, default=40)
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for interface compatibility")
    sub = parser.add_subparsers(dest="verb", required=True)

    def one(name, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("graph", nargs="?", default=None,
                       help="file, named:NAME:PARAMS, or - for stdin")
        return p

    def two(name, count, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("graphs", nargs=count)
        return p

    one("new", help="parse and normalize a graph")
    p = two("product", "+", help="simplicial product of two or more graphs")
    p.add_argument("--metadata", action="store_true",
                   help="emit provenance, f-vector, euler and dim instead of the graph")
    one("enhance", help="barycentric refinement G x K1")
    p = one("refine", help="iterated refinement sequence")
    p.add_argument("-n", "--steps", type=int, default=1)
    two("join", 2, help="Zykov join")
    one("suspend", help="join with the 0-sphere")
    one("betti", help="exact Betti vector")
    one("poincare", help="Poincare polynomial coefficients")
    one("dim", help="inductive dimension")
    one("euler", help="Euler characteristic and f-vector")
    one("curvature", help="per-vertex curvature, totals to Euler")
    p = sub.add_parser("chromatic", help="chromatic number (product or small graph)")
    p.add_argument("graphs", nargs="*")
    one("contractible", help="recursive contractibility (tri-state)")
    p = one("sphere-check", help="homotopy sphere recognition")
    p.add_argument("-d", "--dim", type=int, required=True)
    two("kunneth", 2, help="verify the cohomology product formula")
    two("derham-check", 2, help="verify the tensor complex against Whitney")
    p = one("export", help="export graph or incidence matrix")
    p.add_argument("--format", choices=("dot", "json", "triplet"), default="json")
    p.add_argument("--grade", type=int, default=0,
                   help="incidence matrix grade for triplet export")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except product.SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
