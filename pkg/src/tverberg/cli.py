"""Command-line interface.

Input files are JSON documents with a ``type`` key::

    {"type": "simplicial", "facets": [[0, 1, 2], ...]}
    {"type": "cw", "cells": [{"id": "a", "dim": 0, "boundary": []}, ...]}
    {"type": "graph", "vertices": 4, "edges": [[0, 1], ...]}

Exit codes: 0 success / certified / pass, 1 a well-formed negative answer
(fail, inconclusive), 2 bad input or a size guard tripped.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .certify import certify_tverberg
from .complementary import check_complementary_acyclic
from .complex_core import Cell, RegularCwComplex, SimplicialComplex
from .deleted_product import deleted_product
from .errors import InvalidComplex, ParseError, TverbergError
from .generators import (
    boundary_simplex,
    cross_polytope_boundary,
    cycle_graph,
    minimal_cw_sphere,
    path_graph,
    simplex,
    suspension,
    y_graph,
)
from .graphs import Multigraph, classify_12_tverberg, corpus_crosscheck, graph_to_cw
from .homology import HomologyProfile, acyclicity_witness, reduced_homology

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


# -- file format -------------------------------------------------------------

def parse_complex(doc, *, strict: bool = False):
    """Build a complex from a decoded JSON document."""
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    kind = doc.get("type")
    if kind == "simplicial":
        facets = doc.get("facets")
        if not isinstance(facets, list):
            raise ParseError("'facets' must be a list of vertex lists")
        for n, f in enumerate(facets):
            if not isinstance(f, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in f):
                raise ParseError(f"facets[{n}]: expected a list of integers, got {f!r}")
        try:
            return SimplicialComplex(facets)
        except InvalidComplex as exc:
            raise ParseError(f"facets: {exc}") from exc
    if kind == "cw":
        raw = doc.get("cells")
        if not isinstance(raw, list):
            raise ParseError("'cells' must be a list")
        cells = []
        for n, c in enumerate(raw):
            if not isinstance(c, dict) or not {"id", "dim"} <= c.keys():
                raise ParseError(f"cells[{n}]: expected an object with 'id', 'dim' and 'boundary'")
            bd = c.get("boundary", [])
            if not isinstance(c["dim"], int) or not isinstance(bd, list):
                raise ParseError(f"cells[{n}] ({c['id']!r}): 'dim' must be an integer and 'boundary' a list")
            cells.append(Cell(str(c["id"]), c["dim"], frozenset(str(b) for b in bd)))
        try:
            return RegularCwComplex(cells, strict=strict)
        except InvalidComplex as exc:
            raise ParseError(f"cells: {exc}") from exc
    if kind == "graph":
        nv, edges = doc.get("vertices"), doc.get("edges")
        if not isinstance(nv, int) or not isinstance(edges, list):
            raise ParseError("graph needs integer 'vertices' and list 'edges'")
        for n, e in enumerate(edges):
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e)):
                raise ParseError(f"edges[{n}]: expected a pair of integers, got {e!r}")
        try:
            return Multigraph(nv, edges)
        except ValueError as exc:
            raise ParseError(f"edges: {exc}") from exc
    raise ParseError(f"unknown type {kind!r}; expected simplicial, cw or graph")


def dump_complex(obj) -> dict:
    if isinstance(obj, SimplicialComplex):
        return {"type": "simplicial", "facets": [list(f) for f in obj.facets]}
    if isinstance(obj, RegularCwComplex):
        return {
            "type": "cw",
            "cells": [
                {"id": i, "dim": obj.cells[i].dim, "boundary": sorted(obj.cells[i].covers)} for i in obj.graded_ids
            ],
        }
    if isinstance(obj, Multigraph):
        return {"type": "graph", "vertices": obj.vertex_count, "edges": [list(e) for e in obj.edges]}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def load_file(path: str, *, strict: bool = False):
    data = Path(path).read_bytes()
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 text") from exc
    try:
        obj = parse_complex(doc, strict=strict)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return obj, "sha256:" + hashlib.sha256(data).hexdigest()


def _as_complex(obj):
    return graph_to_cw(obj) if isinstance(obj, Multigraph) else obj


# -- commands ----------------------------------------------------------------
# each returns (exit code, result dict, text lines)

def _homology_lines(prof: HomologyProfile) -> list[str]:
    if prof.is_empty_complex:
        return ["empty complex"]
    return [f"H~{k}: {HomologyProfile.group_name(b, t)}" for k, (b, t) in enumerate(zip(prof.betti, prof.torsion))]


def cmd_homology(args, obj):
    prof = reduced_homology(_as_complex(obj))
    return EXIT_OK, prof.as_dict(), _homology_lines(prof)


def cmd_acyclic(args, obj):
    bad = acyclicity_witness(_as_complex(obj), args.n)
    result = {"n": args.n, "acyclic": bad is None, "witness_degree": bad}
    if bad is None:
        return EXIT_OK, result, [f"{args.n}-acyclic: yes"]
    why = "complex is empty" if bad == -1 else f"H~{bad} is non-zero"
    return EXIT_NEGATIVE, result, [f"{args.n}-acyclic: no ({why})"]


def cmd_complementary(args, obj):
    X = _as_complex(obj)
    rep = check_complementary_acyclic(X, args.k, args.n, exhaustive=args.all, complex_id=args.file)
    lines = [f"{args.k}-complementary {args.n}-acyclic: {rep.verdict} ({rep.checked_count} tuples checked)"]
    lines += ["  " + f.describe() for f in rep.failures]
    return (EXIT_OK if rep.passed else EXIT_NEGATIVE), rep.as_dict(), lines


def cmd_conf(args, obj):
    conf = deleted_product(_as_complex(obj), args.r, args.max_cells)
    census = conf.census()
    result = {"r": args.r, "cells": len(conf), "census": census}
    lines = [f"Conf_{args.r}: {len(conf)} cells", "census by dimension: " + " ".join(map(str, census))]
    if args.homology:
        prof = reduced_homology(conf.underlying)
        result["homology"] = prof.as_dict()
        lines += _homology_lines(prof)
    return EXIT_OK, result, lines


def cmd_certify(args, obj):
    cert = certify_tverberg(
        _as_complex(obj), args.d, args.r, args.method.replace("-", "_"),
        max_cells=args.max_cells, complex_id=args.file,
    )
    lines = [f"({args.d},{args.r})-Tverberg: {cert.verdict} via {cert.method}", f"reason: {cert.reason}"]
    if cert.witness is not None:
        lines.append(f"prime power: {cert.witness}")
    return (EXIT_OK if cert.certified else EXIT_NEGATIVE), cert.as_dict(), lines


def cmd_graph_classify(args, obj):
    if not isinstance(obj, Multigraph):
        raise ParseError(f"{args.file}: 'graph classify' needs a graph file")
    verdict = classify_12_tverberg(obj)
    result = {"tverberg_1_2": verdict}
    return (EXIT_OK if verdict else EXIT_NEGATIVE), result, [f"(1,2)-Tverberg: {'yes' if verdict else 'no'}"]


def cmd_graph_corpus(args, _obj):
    rows = corpus_crosscheck(args.max_edges)
    violations = [r for r in rows if r.violation]
    unconfirmed = [r for r in rows if r.unconfirmed]
    result = {
        "max_edges": args.max_edges,
        "graphs": len(rows),
        "violations": len(violations),
        "classifier_true_conf2_disconnected": [r.as_dict() for r in unconfirmed],
        "table": [r.as_dict() for r in rows],
    }
    lines = [f"{len(rows)} connected multigraphs with at most {args.max_edges} edges"]
    lines += [
        f"  {r.graph.edges}: classifier={'yes' if r.classifier else 'no'} conf2={'connected' if r.conf2_connected else 'disconnected'}"
        for r in rows
    ]
    lines.append(f"soundness violations: {len(violations)}")
    lines.append(f"classifier yes but Conf_2 disconnected: {len(unconfirmed)}")
    return (EXIT_OK if not violations else EXIT_NEGATIVE), result, lines


GENERATORS = {
    "simplex": simplex,
    "boundary-simplex": boundary_simplex,
    "cross-polytope": cross_polytope_boundary,
    "minimal-cw-sphere": minimal_cw_sphere,
    "cycle": cycle_graph,
    "path": path_graph,
    "y": y_graph,
}


def cmd_gen(args, _obj):
    fn = GENERATORS[args.name]
    obj = fn() if args.name == "y" else fn(*([args.param] if args.param is not None else []))
    if args.suspend:
        if not isinstance(obj, SimplicialComplex):
            raise ParseError("--suspend only applies to simplicial generators")
        for _ in range(args.suspend):
            obj = suspension(obj)
    text = json.dumps(dump_complex(obj), sort_keys=True) + "\n"
    Path(args.out).write_text(text)
    return EXIT_OK, {"name": args.name, "param": args.param, "suspend": args.suspend, "out": args.out}, [f"wrote {args.out}"]


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="check that every CW cell boundary is a homology sphere")

    parser = argparse.ArgumentParser(prog="tverberg", parents=[common],
                                     description="Certify the topological Tverberg property of finite complexes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", parents=[common], help="reduced integral homology")
    p.add_argument("file")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("acyclic", parents=[common], help="is the complex n-acyclic")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_acyclic)

    p = sub.add_parser("complementary", parents=[common], help="k-complementary n-acyclicity")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="report every failing tuple")
    p.set_defaults(func=cmd_complementary)

    p = sub.add_parser("conf", parents=[common], help="deleted product census")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--homology", action="store_true")
    p.add_argument("--max-cells", type=int, default=None)
    p.set_defaults(func=cmd_conf)

    p = sub.add_parser("certify", parents=[common], help="certify the (d, r)-Tverberg property")
    p.add_argument("file")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", choices=["complementary", "deleted-product", "both"], default="both")
    p.add_argument("--max-cells", type=int, default=None)
    p.set_defaults(func=cmd_certify)

    g = sub.add_parser("graph", parents=[common], help="dimension-1 classification")
    gsub = g.add_subparsers(dest="graph_command", required=True)
    p = gsub.add_parser("classify", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_graph_classify)
    p = gsub.add_parser("corpus", parents=[common])
    p.add_argument("--max-edges", type=int, required=True)
    p.set_defaults(func=cmd_graph_corpus, file=None)

    p = sub.add_parser("gen", parents=[common], help="write a generated complex")
    p.add_argument("name", choices=sorted(GENERATORS))
    p.add_argument("param", type=int, nargs="?")
    p.add_argument("--suspend", type=int, default=0, help="suspend the result this many times")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen, file=None)
    return parser


def run(argv: list[str]) -> tuple[int, dict | None]:
    """Execute one command; returns the exit code and the report."""
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    strict = getattr(args, "strict", False)
    report = None
    try:
        obj, digest = (None, None)
        if args.file is not None:
            obj, digest = load_file(args.file, strict=strict)
        code, result, lines = args.func(args, obj)
        report = {
            "tool": "tverberg",
            "version": __version__,
            "command": list(argv),
            "input_digest": digest,
            "result": result,
        }
    except (TverbergError, OSError, ValueError) as exc:
        code = EXIT_ERROR
        msg = str(exc) or type(exc).__name__
        if as_json:
            report = {"tool": "tverberg", "version": __version__, "command": list(argv),
                      "error": {"kind": type(exc).__name__, "message": msg}}
            print(json.dumps(report, sort_keys=True, indent=2))
        else:
            print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return code, report
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return code, report


def main(argv: list[str] | None = None) -> int:
    code, _ = run(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
