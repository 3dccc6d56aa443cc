"""Command-line interface.

Exit codes: 0 success or equal, 1 unequal, 2 graph-equal-only, 3 type error,
4 syntax error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrows import type_of
from .brauer import BrauerArrow, compose, s, t
from .cutelim import eliminate
from .decide import Verdict, decide
from .errors import ContextError, CutElimError, NotNiceError, ParseError, RewriteError, TypeMismatch
from .gentzen import denote, gentzenize, net_type
from .graph import graph_of
from .syntax import parse_formula, parse_net, parse_term, render_graph, show_formula, show_net, show_term

EXIT_OK, EXIT_UNEQUAL, EXIT_GRAPH_ONLY, EXIT_TYPE, EXIT_SYNTAX = 0, 1, 2, 3, 4
VERDICT_CODES = {Verdict.EQUAL: EXIT_OK, Verdict.UNEQUAL: EXIT_UNEQUAL, Verdict.GRAPH_EQUAL_ONLY: EXIT_GRAPH_ONLY}


def compose_example() -> tuple:
    """The worked composition R : 3 ⊢ 9, P : 9 ⊢ 1 and P∗R : 3 ⊢ 1."""
    R = BrauerArrow(3, 9, [(s(0), t(0)), (s(1), t(3)), (s(2), t(6))] + [(t(n), t(n + 1)) for n in (1, 4, 7)])
    P = BrauerArrow(9, 1, [(s(2), t(0))] + [(s(n), s(n + 1)) for n in (0, 3, 5, 7)])
    return R, P, compose(P, R)


def _sequent(a, b) -> str:
    return f"{show_formula(a)} |- {show_formula(b)}"


def _graph_json(B):
    return None if B is None else json.loads(B.to_json())


def _cmd_parse(args) -> int:
    if args.formula is not None:
        print(show_formula(parse_formula(args.formula)))
    elif args.term is not None:
        print(show_term(parse_term(args.term)))
    else:
        print(show_net(parse_net(args.net)))
    return EXIT_OK


def _cmd_type(args) -> int:
    if args.net is not None:
        print(_sequent(*net_type(parse_net(args.net))))
    else:
        print(_sequent(*type_of(parse_term(args.term))))
    return EXIT_OK


def _cmd_graph(args) -> int:
    f = parse_term(args.term)
    print(render_graph(graph_of(f), args.format))
    return EXIT_OK


def _eq_record(text1: str, text2: str, system) -> tuple:
    """``(exit code, json record)`` for one pair of terms."""
    try:
        f1, f2 = parse_term(text1), parse_term(text2)
    except ParseError as exc:
        return EXIT_SYNTAX, {"error": "syntax", "message": str(exc)}
    try:
        d = decide(f1, f2, system)
    except (TypeMismatch, ContextError, NotNiceError) as exc:
        return EXIT_TYPE, {"error": "type", "message": str(exc)}
    record = {"verdict": d.verdict.value, "graph1": _graph_json(d.graph1), "graph2": _graph_json(d.graph2), "reason": d.reason}
    return VERDICT_CODES[d.verdict], record


def _cmd_eq(args) -> int:
    if args.from_file:
        worst = EXIT_OK
        with open(args.from_file, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "==" not in line:
                    code, record = EXIT_SYNTAX, {"error": "syntax", "message": "expected 'term == term'"}
                else:
                    left, right = line.split("==", 1)
                    code, record = _eq_record(left.strip(), right.strip(), args.system)
                print(json.dumps({"line": lineno, **record}, ensure_ascii=False, separators=(",", ":")))
                worst = max(worst, code)
        return worst
    if not args.term or len(args.term) != 2:
        print("eq needs exactly two -t terms or --from-file", file=sys.stderr)
        return EXIT_SYNTAX
    code, record = _eq_record(args.term[0], args.term[1], args.system)
    if "error" in record:
        print(record["message"], file=sys.stderr)
        return code
    print(json.dumps(record, ensure_ascii=False, separators=(",", ":")))
    return code


def _cmd_gentzenize(args) -> int:
    net = gentzenize(parse_term(args.term))
    print(show_net(net))
    if args.denote:
        print(show_term(denote(net)))
    return EXIT_OK


def _cmd_cutelim(args) -> int:
    net = parse_net(args.net) if args.net is not None else gentzenize(parse_term(args.term))
    result, trace = eliminate(net, prefer=args.prefer, check=args.check)
    if args.trace:
        for step in trace:
            print(step)
    print(show_net(result))
    return EXIT_OK


def _cmd_demo(args) -> int:
    R, P, PR = compose_example()
    for name, B in (("R", R), ("P", P), ("P*R", PR)):
        print(f"{name} {B.to_json()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starcoh", description="Graphs, nets and equality decisions for star-autonomous arrow terms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse and print canonically")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("-f", "--formula")
    g.add_argument("-t", "--term")
    g.add_argument("-n", "--net")
    p.set_defaults(run=_cmd_parse)

    p = sub.add_parser("type", help="print the type of a term or net")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("-t", "--term")
    g.add_argument("-n", "--net")
    p.set_defaults(run=_cmd_type)

    p = sub.add_parser("graph", help="print the graph of a term")
    p.add_argument("-t", "--term", required=True)
    p.add_argument("--format", choices=("pairs", "dot", "ascii"), default="pairs")
    p.set_defaults(run=_cmd_graph)

    p = sub.add_parser("eq", help="decide equality of two terms")
    p.add_argument("-t", "--term", action="append")
    p.add_argument("--from-file", help="file with one 'term == term' per line")
    p.add_argument("--system", choices=("ds", "pn", "s"))
    p.set_defaults(run=_cmd_eq)

    p = sub.add_parser("gentzenize", help="translate a term into a net")
    p.add_argument("-t", "--term", required=True)
    p.add_argument("--denote", action="store_true", help="also print the denotation of the net")
    p.set_defaults(run=_cmd_gentzenize)

    p = sub.add_parser("cutelim", help="eliminate the cuts of a net")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("-n", "--net")
    g.add_argument("-t", "--term", help="gentzenize this term first")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--prefer", choices=("f", "g"), default="g")
    p.add_argument("--check", action="store_true", help="verify type and graph after every step")
    p.set_defaults(run=_cmd_cutelim)

    p = sub.add_parser("demo", help="built-in examples")
    p.add_argument("name", choices=("compose-example",))
    p.set_defaults(run=_cmd_demo)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (TypeMismatch, ContextError, NotNiceError, RewriteError, CutElimError) as exc:
        print(f"type error: {exc}", file=sys.stderr)
        return EXIT_TYPE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX


if __name__ == "__main__":
    sys.exit(main())
