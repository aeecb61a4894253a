"""Command-line front end.

Subcommands: cohomology, chromatic, verify, classify-ring, compare.
Text and JSON output are rendered from the same computed values.
Exit codes: 0 success / all checks pass, 1 check failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (Endomorphism, GradedAlgebra, RingParams, load_algebra,
                      ring_invariant, verify_algebra, verify_endomorphism)
from .chromatic import (DEFAULT_EDGE_CAP, chromatic_delete_contract,
                        chromatic_state_sum, evaluate_at_qdim)
from .cochain import build_complex
from .errors import InputError
from .graph import Graph, load_graph
from .homology import GroupInvariant, cohomology, graded_euler
from .polynomial import IntPolynomial
from .verify import CHECK_NAMES, run_checks

DEFAULT_MAX_DIM = 20000

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _load_twist(spec: str | None, algebra: GradedAlgebra,
                file_twist: Endomorphism | None) -> Endomorphism | None:
    if spec is None:
        return None
    if spec == "zero":
        return Endomorphism.zero(algebra.dim)
    if spec == "identity":
        return Endomorphism.identity(algebra.dim)
    if spec == "file":
        if file_twist is None:
            raise InputError("--twist file: the algebra spec has no 'twist' field")
        return file_twist
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read twist {spec!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON in twist file {spec}: {exc}") from None
    matrix = doc.get("twist") if isinstance(doc, dict) else doc
    if not isinstance(matrix, list):
        raise InputError(f"twist file {spec} must hold a matrix or a 'twist' field")
    return Endomorphism(matrix, name=spec)


def _load_inputs(args) -> tuple[Graph, GradedAlgebra, Endomorphism | None]:
    g = load_graph(args.graph)
    algebra, file_twist = load_algebra(args.algebra)
    twist = _load_twist(getattr(args, "twist", None), algebra, file_twist)
    if twist is None and file_twist is not None and getattr(args, "twist", None) is None:
        # a twist embedded in the algebra file is used unless overridden
        twist = file_twist
    if g.num_edges > args.max_edges:
        raise InputError(f"graph has {g.num_edges} edges, cap is {args.max_edges} "
                         f"(raise with --max-edges)")
    return g, algebra, twist


def _validate_for_computation(algebra: GradedAlgebra, twist: Endomorphism | None):
    report = verify_algebra(algebra)
    if not report.ok:
        raise InputError(f"invalid algebra {algebra.name}: {report}")
    if twist is not None:
        treport = verify_endomorphism(algebra, twist)
        if not treport.ok:
            raise InputError(f"invalid twist {twist.name}: {treport}")


def _cohomology_payload(g: Graph, algebra: GradedAlgebra, twist: Endomorphism | None,
                        args) -> dict:
    cx = build_complex(g, algebra, twist, max_block_dim=args.max_dim)
    groups = cohomology(cx)
    chromatic = chromatic_state_sum(g, max_edges=args.max_edges)
    return {
        "input": {
            "graph": str(args.graph),
            "num_vertices": g.num_vertices,
            "num_edges": g.num_edges,
            "algebra": algebra.name,
            "twist": twist.name if twist is not None else None,
        },
        "qdim": algebra.q_dim().to_string("q"),
        "chromatic": chromatic.to_string("L"),
        "cohomology": [grp.to_json_list() for grp in groups],
        "euler": graded_euler(groups).to_string("q"),
        "checks": [],
        "_groups": groups,
    }


def cmd_cohomology(args) -> int:
    g, algebra, twist = _load_inputs(args)
    _validate_for_computation(algebra, twist)
    payload = _cohomology_payload(g, algebra, twist, args)
    groups = payload.pop("_groups")
    if args.json:
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"graph: {args.graph} (v={g.num_vertices}, e={g.num_edges})")
    print(f"algebra: {algebra.name} (q dim = {payload['qdim']})")
    if twist is not None:
        print(f"twisted differential: f = {twist.name}")
    for i, grp in enumerate(groups):
        print(f"H^{i} = {grp.render()}")
    for i, grp in enumerate(groups):
        if not grp.is_trivial():
            print(f"q dim H^{i} = {grp.q_dim().to_string('q')}")
    print(f"euler = {payload['euler']}")
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = load_graph(args.graph)
    if g.num_edges > args.max_edges:
        raise InputError(f"graph has {g.num_edges} edges, cap is {args.max_edges}")
    by_recursion = chromatic_delete_contract(g)
    by_state_sum = chromatic_state_sum(g, max_edges=args.max_edges)
    agree = by_recursion == by_state_sum
    if args.json:
        print(json.dumps({
            "input": {"graph": str(args.graph), "num_vertices": g.num_vertices,
                      "num_edges": g.num_edges},
            "chromatic": by_state_sum.to_string("L"),
            "chromatic_delete_contract": by_recursion.to_string("L"),
            "algorithms_agree": agree,
        }, indent=2))
    else:
        print(f"P = {by_state_sum.to_string('L')}")
        print(f"delete-contraction {'==' if agree else '!='} state-sum")
    if not agree:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    algebra, file_twist = load_algebra(args.algebra)
    twist = _load_twist(args.twist, algebra, file_twist)
    if twist is None and file_twist is not None and args.twist is None:
        twist = file_twist
    if g.num_edges > args.max_edges:
        raise InputError(f"graph has {g.num_edges} edges, cap is {args.max_edges}")
    if args.check:
        unknown = [name for name in args.check if name not in CHECK_NAMES]
        if unknown:
            raise InputError(f"unknown check(s) {unknown}; choose from {', '.join(CHECK_NAMES)}")
        names: tuple[str, ...] | None = tuple(args.check)
    else:
        names = None  # --all / default: every applicable check
    reports = run_checks(g, algebra, twist, names=names, seed=args.seed,
                         trials=args.trials, label=str(args.graph))
    if args.json:
        print(json.dumps({
            "input": {"graph": str(args.graph), "algebra": args.algebra,
                      "twist": twist.name if twist is not None else None},
            "checks": [r.to_json_dict() for r in reports],
        }, indent=2))
    else:
        for r in reports:
            print(r.line())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def cmd_classify_ring(args) -> int:
    p1 = RingParams(args.a, args.b)
    p2 = RingParams(args.a2, args.b2)
    inv1, inv2 = ring_invariant(p1), ring_invariant(p2)
    same = inv1 == inv2
    if args.json:
        print(json.dumps({
            "ring1": {"a": p1.a, "b": p1.b, "discriminant": inv1[0], "b_mod_2": inv1[1]},
            "ring2": {"a": p2.a, "b": p2.b, "discriminant": inv2[0], "b_mod_2": inv2[1]},
            "isomorphic": same,
        }, indent=2))
    else:
        for p, inv in ((p1, inv1), (p2, inv2)):
            parity = "even" if inv[1] == 0 else "odd"
            print(f"(a={p.a}, b={p.b}): invariant (b^2+4a = {inv[0]}, b {parity})")
        print("ISOMORPHIC" if same else "NOT ISOMORPHIC")
    return EXIT_OK


def cmd_compare(args) -> int:
    g1 = load_graph(args.graph)
    g2 = load_graph(args.graph2)
    algebra, file_twist = load_algebra(args.algebra)
    twist = _load_twist(args.twist, algebra, file_twist)
    if twist is None and file_twist is not None and args.twist is None:
        twist = file_twist
    _validate_for_computation(algebra, twist)
    for g in (g1, g2):
        if g.num_edges > args.max_edges:
            raise InputError(f"graph has {g.num_edges} edges, cap is {args.max_edges}")

    p1 = chromatic_state_sum(g1, max_edges=args.max_edges)
    p2 = chromatic_state_sum(g2, max_edges=args.max_edges)
    h1 = cohomology(build_complex(g1, algebra, twist, max_block_dim=args.max_dim))
    h2 = cohomology(build_complex(g2, algebra, twist, max_block_dim=args.max_dim))
    levels = max(len(h1), len(h2))
    h1 += [GroupInvariant.trivial()] * (levels - len(h1))
    h2 += [GroupInvariant.trivial()] * (levels - len(h2))

    if args.json:
        print(json.dumps({
            "input": {"graph": str(args.graph), "graph2": str(args.graph2),
                      "algebra": algebra.name,
                      "twist": twist.name if twist is not None else None},
            "chromatic": {"graph": p1.to_string("L"), "graph2": p2.to_string("L"),
                          "equal": p1 == p2},
            "cohomology": {
                "graph": [grp.to_json_list() for grp in h1],
                "graph2": [grp.to_json_list() for grp in h2],
                "equal_by_level": [a == b for a, b in zip(h1, h2)],
            },
        }, indent=2))
        return EXIT_OK

    if twist is not None:
        print(f"twisted differential: f = {twist.name}")
    if p1 == p2:
        print(f"chromatic: EQUAL ({p1.to_string('L')})")
    else:
        print(f"chromatic: DIFFER ({p1.to_string('L')} vs {p2.to_string('L')})")
    for i, (a, b) in enumerate(zip(h1, h2)):
        if a == b:
            print(f"H^{i}: EQUAL ({a.render()})")
        else:
            print(f"H^{i}: DIFFER ({a.render()} vs {b.render()})")
    verdict = "EQUAL" if (p1 == p2 and h1 == h2) else "DIFFER"
    print(f"overall: {verdict}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcoh",
        description="Cochain complexes of graphs over graded integer algebras: "
                    "integer cohomology, chromatic polynomials, theorem checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph2=False, needs_algebra=True):
        p.add_argument("--graph", required=True, help="path to a graph file")
        if graph2:
            p.add_argument("--graph2", required=True, help="path to the second graph file")
        if needs_algebra:
            p.add_argument("--algebra", required=True,
                           help="builtin name (z, zx2, zx3, zxn:<n>, rank2:<a>,<b>, "
                                "zx-nilpotent) or path to a JSON algebra spec")
            p.add_argument("--twist", default=None,
                           help="'zero', 'identity', 'file' (use the algebra spec's "
                                "twist field) or a path to a JSON matrix")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
        p.add_argument("--max-edges", type=int, default=DEFAULT_EDGE_CAP,
                       help=f"edge-count cap (default {DEFAULT_EDGE_CAP})")
        p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                       help=f"largest allowed matrix block (default {DEFAULT_MAX_DIM})")

    p = sub.add_parser("cohomology", help="compute bigraded integer cohomology")
    common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("chromatic", help="chromatic polynomial by two algorithms")
    common(p, needs_algebra=False)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("verify", help="run structural theorem checks")
    common(p)
    p.add_argument("--check", action="append", default=None, metavar="NAME",
                   help=f"run one check (repeatable): {', '.join(CHECK_NAMES)}")
    p.add_argument("--all", action="store_true",
                   help="run every applicable check (the default)")
    p.add_argument("--trials", type=int, default=5,
                   help="edge permutations for the edge_order check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify-ring",
                       help="decide isomorphism of two rank-2 rings x*x = a+bx")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("a2", type=int)
    p.add_argument("b2", type=int)
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(func=cmd_classify_ring)

    p = sub.add_parser("compare", help="compare invariants of two graphs")
    common(p, graph2=True)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching our input-error code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
