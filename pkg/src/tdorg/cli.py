"""Command-line interface.

Exit statuses: 0 affirmative/success, 1 negative verdict, 2 usage or
parse errors (including violated preconditions), 3 size-guard violations.
"""

from __future__ import annotations

import argparse
import sys

from .auxgraphs import build_g_plus, build_independence_graph
from .buried import (enumerate_buried_subgraphs, find_buried_subgraph,
                     is_simplicial_edge, substitute_buried,
                     violated_buried_condition)
from .classify import classification_report, count_normalized_representations
from .errors import (GuardExceededError, InvertiblePairError,
                     NotComparabilityError, ParseError, PreconditionError,
                     TdorgError, TwinsPresentError)
from .generators import random_2dorg, random_bipartite
from .graph import parse_graph, parse_vertex_token, serialize_graph, vertex_token
from .oracle import verify_theorems
from .render import render_svg
from .representation import (construct_normalized_representation,
                             is_normalized, parse_representation, realizes,
                             serialize_representation)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str):
    return parse_graph(_read_text(path))


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _pair_str(pair) -> str:
    a, b = pair
    return f"({vertex_token(a)},{vertex_token(b)})"


def _parse_edge_token(tok: str):
    """Split a combined edge token like u2v3 into its two vertex refs."""
    cut = tok.index("v", 1)
    return parse_vertex_token(tok[:cut]), parse_vertex_token(tok[cut:])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tdorg",
        description="Two-directional orthogonal ray graphs: recognition, "
                    "normalized representations, unique-representability "
                    "classification, and buried subgraphs.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def add(name, help_text, graph_input=True):
        sp = sub.add_parser(name, help=help_text)
        if graph_input:
            sp.add_argument("input", help="graph file in 'p tdorg' format, "
                                          "or - for standard input")
        return sp

    add("recognize", "decide 2DORG membership")

    sp = add("represent", "construct a normalized representation")
    sp.add_argument("-o", "--output", default=None)

    sp = add("check", "check a representation against a graph")
    sp.add_argument("--rep", required=True, help="representation file")
    sp.add_argument("--normalized", action="store_true",
                    help="additionally require normalization")

    sp = add("unique", "decide unique representability")
    sp.add_argument("--report", action="store_true",
                    help="print the full classification report")

    add("count", "count normalized representations")

    sp = add("buried", "find or enumerate buried subgraphs")
    sp.add_argument("--all", action="store_true",
                    help="enumerate every buried vertex set exhaustively")

    add("gplus", "print the components of the pair graph G+")
    add("iclasses", "print the implication classes of I(G)")

    sp = add("substitute", "replace a buried subgraph by one kept edge")
    sp.add_argument("--buried", required=True,
                    help="buried vertex set as space-separated tokens")
    sp.add_argument("--keep", required=True,
                    help="kept edge as a combined token, e.g. u1v1")
    sp.add_argument("-o", "--output", default=None)

    sp = add("gen", "generate a graph deterministically", graph_input=False)
    sp.add_argument("--nu", type=int, required=True)
    sp.add_argument("--nv", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--mode", choices=["2dorg", "bipartite"], default="2dorg")
    sp.add_argument("--p", type=float, default=0.5,
                    help="edge probability for --mode bipartite")
    sp.add_argument("-o", "--output", default=None)

    sp = add("render", "render a representation as an SVG ray diagram")
    sp.add_argument("--rep", default=None,
                    help="representation file; constructed if omitted")
    sp.add_argument("-o", "--output", default=None)

    add("oracle", "run the brute-force theorem verifier")
    return p


# -- subcommand handlers -------------------------------------------------------

def _cmd_recognize(args) -> int:
    g = _load_graph(args.input)
    report = classification_report(g)
    if report.is_2dorg:
        print("2DORG")
        return EXIT_OK
    print(f"NOT-2DORG invertible pair: {_pair_str(report.invertible_pair)}")
    return EXIT_NEGATIVE


def _cmd_represent(args) -> int:
    g = _load_graph(args.input)
    try:
        rep = construct_normalized_representation(g)
    except InvertiblePairError as exc:
        print(f"NOT-2DORG {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    _write_out(serialize_representation(rep), args.output)
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _load_graph(args.input)
    rep = parse_representation(_read_text(args.rep), g)
    if not realizes(g, rep):
        print("NOT-REALIZES")
        return EXIT_NEGATIVE
    print("REALIZES")
    if args.normalized:
        if not is_normalized(g, rep):
            print("NOT-NORMALIZED")
            return EXIT_NEGATIVE
        print("NORMALIZED")
    return EXIT_OK


def _report_lines(report) -> list[str]:
    out = [f"is-2dorg: {report.is_2dorg}",
           f"connected: {report.connected}"]
    if report.invertible_pair is not None:
        out.append(f"invertible-pair: {_pair_str(report.invertible_pair)}")
    if report.nontrivial_gplus_components is not None:
        out.append("non-trivial-gplus-components: "
                   f"{report.nontrivial_gplus_components}")
    if report.uniquely_representable is not None:
        out.append(f"uniquely-representable: {report.uniquely_representable}")
    if report.normalized_representation_count is not None:
        out.append("normalized-representation-count: "
                   f"{report.normalized_representation_count}")
    if report.buried_subgraph is not None:
        toks = " ".join(sorted(vertex_token(r) for r in report.buried_subgraph))
        out.append(f"buried-subgraph: {toks}")
    return out


def _cmd_unique(args) -> int:
    g = _load_graph(args.input)
    report = classification_report(g)
    if not report.is_2dorg:
        print(f"NOT-2DORG invertible pair: {_pair_str(report.invertible_pair)}")
        return EXIT_NEGATIVE
    if report.uniquely_representable is None:
        raise PreconditionError("graph has twins; collapse them first")
    print("UNIQUE" if report.uniquely_representable else "NOT-UNIQUE")
    if args.report:
        for line in _report_lines(report):
            print(line)
    return EXIT_OK if report.uniquely_representable else EXIT_NEGATIVE


def _cmd_count(args) -> int:
    g = _load_graph(args.input)
    print(count_normalized_representations(g))
    return EXIT_OK


def _cmd_buried(args) -> int:
    g = _load_graph(args.input)
    if args.all:
        found = enumerate_buried_subgraphs(g)
        sets = found
    else:
        b = find_buried_subgraph(g)
        sets = [b.vertices] if b else []
    for vs in sets:
        toks = " ".join(sorted(vertex_token(r) for r in vs))
        cond = violated_buried_condition(g, vs)
        status = "buried" if cond is None else f"violates ({cond})"
        print(f"{toks} [{status}]")
    if not sets:
        print("no buried subgraph")
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_gplus(args) -> int:
    g = _load_graph(args.input)
    aux = build_g_plus(g)
    for k, members in enumerate(aux.components):
        kind = "non-trivial" if aux.nontrivial[k] else "trivial"
        toks = " ".join(_pair_str(p) for p in members)
        print(f"component {k} [{kind}]: {toks}")
    return EXIT_OK


def _cmd_iclasses(args) -> int:
    g = _load_graph(args.input)
    ig = build_independence_graph(g)
    for ci, cls in enumerate(ig.implication_classes):
        toks = " ".join(
            f"({ig.edge_refs[a].token()},{ig.edge_refs[b].token()})"
            for a, b in cls)
        print(f"class {ci}: {toks}")
    return EXIT_OK


def _cmd_substitute(args) -> int:
    g = _load_graph(args.input)
    b = [parse_vertex_token(t) for t in args.buried.split()]
    ku, kv = _parse_edge_token(args.keep)
    if ku[0] != "u" or kv[0] != "v":
        raise PreconditionError(f"--keep must name an edge token, "
                                f"got {args.keep!r}")
    keep = g.edge(ku[1], kv[1])
    g2 = substitute_buried(g, b, keep)
    _write_out(serialize_graph(g2), args.output)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.mode == "2dorg":
        g, _ = random_2dorg(args.nu, args.nv, args.seed)
    else:
        g = random_bipartite(args.nu, args.nv, args.p, args.seed)
    _write_out(serialize_graph(g), args.output)
    return EXIT_OK


def _cmd_render(args) -> int:
    g = _load_graph(args.input)
    if args.rep is not None:
        rep = parse_representation(_read_text(args.rep), g)
        if not realizes(g, rep):
            raise PreconditionError("representation does not realize the graph")
    else:
        rep = construct_normalized_representation(g)
    _write_out(render_svg(g, rep), args.output)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    report = verify_theorems(g)
    if report.count is not None:
        print(f"normalized-representation-count: {report.count}")
    if report.all_buried_subgraphs is not None:
        print(f"buried-subgraphs: {len(report.all_buried_subgraphs)}")
    for v in report.verdicts:
        status = "skip" if v.passed is None else ("pass" if v.passed else "FAIL")
        detail = f" ({v.detail})" if v.detail else ""
        print(f"{status} {v.name}{detail}")
    return EXIT_OK if report.all_passed else EXIT_NEGATIVE


_HANDLERS = {
    "recognize": _cmd_recognize,
    "represent": _cmd_represent,
    "check": _cmd_check,
    "unique": _cmd_unique,
    "count": _cmd_count,
    "buried": _cmd_buried,
    "gplus": _cmd_gplus,
    "iclasses": _cmd_iclasses,
    "substitute": _cmd_substitute,
    "gen": _cmd_gen,
    "render": _cmd_render,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.subcommand](args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, PreconditionError, TwinsPresentError,
            NotComparabilityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvertiblePairError as exc:
        print(f"NOT-2DORG {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except TdorgError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
