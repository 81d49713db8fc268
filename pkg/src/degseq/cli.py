"""Command-line front end.

Exit codes: 0 affirmative verdict or plain success, 1 negative verdict,
2 usage error (unparseable input, out-of-range parameters), 3 internal
inconsistency (oracle disagreement or a violated invariant). Output is
line-oriented and stable; informational notes go to stderr so stdout can
be compared against golden files.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, maximal, orders, realizability
from .errors import (
    DegseqError,
    InternalInconsistencyError,
    NotCGraphicalError,
    NotGraphicalError,
    NotMajorizedError,
    OracleMismatchError,
    SumMismatchError,
)
from .graphs import to_dot, to_edge_list_text
from .orders import DegreeSequence, format_sequence, parse_sequence

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _note(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _parse_seq(args, literal: str) -> DegreeSequence:
    seq, already_sorted = parse_sequence(literal)
    if not already_sorted:
        _note(args, f"note: input reordered to {format_sequence(seq)}")
    return seq


def _print_trace(trace: realizability.ReductionTrace) -> None:
    for step in trace.steps:
        _emit(
            f"  {format_sequence(step.before)} -[{step.rule}]-> {format_sequence(step.after)}"
        )
    _emit(f"  {trace.outcome}")


def _cmd_check(args) -> int:
    seq = _parse_seq(args, args.sequence)
    method = args.method
    certificate = None
    if method == "eg":
        graphical = realizability.erdos_gallai(seq)
    elif method == "hh":
        graphical, certificate = realizability.havel_hakimi_trace(seq)
    elif method == "constant":
        verdict = realizability.reduce_to_constant(seq)
        graphical, certificate = verdict.graphical, verdict.certificate
    else:  # certificate
        witness = realizability.non_graphical_certificate(seq)
        if witness is None:
            verdict = realizability.Verdict(seq, True, None, "certificate", None)
            if args.json:
                payload = verdict.to_dict()
                payload["conclusive"] = False
                _emit(json.dumps(payload, sort_keys=True))
            else:
                _emit(f"sequence: {format_sequence(seq)}")
                _emit("inconclusive: no domination witness")
            return EXIT_OK
        graphical, certificate = False, witness

    c_graphical = None
    if args.connected:
        c_graphical = graphical and realizability.is_c_graphical(seq)
        if c_graphical:
            certificate = realizability.RealizationCertificate.from_graph(
                realizability.realize_connected(seq)
            )
    verdict = realizability.Verdict(seq, graphical, c_graphical, method, certificate)

    if args.json:
        _emit(json.dumps(verdict.to_dict(), sort_keys=True))
    else:
        _emit(f"sequence: {format_sequence(seq)}")
        _emit(f"graphical: {'yes' if graphical else 'no'} (method: {method})")
        if args.connected:
            _emit(f"c-graphical: {'yes' if c_graphical else 'no'}")
        if isinstance(certificate, realizability.ReductionTrace):
            _print_trace(certificate)
        elif isinstance(certificate, realizability.NonGraphicalWitness):
            _emit(f"witness: {format_sequence(certificate.witness)} (d={certificate.d})")
        elif isinstance(certificate, realizability.RealizationCertificate):
            _emit("realization: " + " ".join(f"{u}-{v}" for u, v in certificate.edges))
    negative = (not graphical) or (args.connected and not c_graphical)
    return EXIT_NEGATIVE if negative else EXIT_OK


def _cmd_realize(args) -> int:
    seq = _parse_seq(args, args.sequence)
    try:
        if args.connected:
            g = realizability.realize_connected(seq)
        else:
            g = realizability.realize(seq)
    except (NotGraphicalError, NotCGraphicalError) as exc:
        if args.json:
            _emit(json.dumps({"sequence": list(seq), "realized": False, "reason": str(exc)}))
        else:
            print(f"not realizable: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.json:
        _emit(
            json.dumps(
                {
                    "sequence": list(seq),
                    "realized": True,
                    "n": g.n,
                    "edges": [list(e) for e in g.sorted_edges()],
                },
                sort_keys=True,
            )
        )
    elif args.format == "dot":
        _emit(to_dot(g))
    else:
        _emit(to_edge_list_text(g))
    return EXIT_OK


def _cmd_compare(args) -> int:
    x = _parse_seq(args, args.x)
    y = _parse_seq(args, args.y)
    verdict = orders.compare(x, y, order=args.order)
    if args.json:
        _emit(
            json.dumps(
                {"x": list(x), "y": list(y), "order": args.order, "verdict": verdict.value},
                sort_keys=True,
            )
        )
    else:
        _emit(verdict.value)
    return EXIT_OK


def _cmd_construct(args) -> int:
    n, d = args.n, args.d
    if d < 0:
        if args.prime:
            raise DegseqError("the clique-fill family is not defined for d < 0")
        seq, g = constructions.incomplete_star(n, d)
    elif args.prime:
        seq = constructions.clique_fill_sequence(n, d)
        g = constructions.build_clique_fill(n, d)
    else:
        seq = constructions.hub_fill_sequence(n, d)
        g = constructions.build_hub_fill(n, d)
    if args.json:
        payload = {"n": n, "d": d, "prime": bool(args.prime), "sequence": list(seq)}
        if args.emit in ("graph", "both"):
            payload["edges"] = [list(e) for e in g.sorted_edges()]
        _emit(json.dumps(payload, sort_keys=True))
        return EXIT_OK
    if args.emit in ("seq", "both"):
        _emit(format_sequence(seq))
    if args.emit in ("graph", "both"):
        _emit(to_edge_list_text(g))
    return EXIT_OK


def _cmd_maximal(args) -> int:
    report = maximal.maximal_elements(args.n, args.d, oracle=args.oracle, max_n=args.max_n)
    if args.max_n is not None:
        _note(args, f"note: enumeration cap overridden to {args.max_n}")
    if args.json:
        _emit(json.dumps(report.to_dict(), sort_keys=True))
        return EXIT_OK
    _note(
        args,
        f"n={report.n} d={report.d} image={len(report.all_sequences)} "
        f"maximal={len(report.maximal)} "
        f"oracle_agreement={'yes' if report.oracle_agreement else 'unchecked'}",
    )
    for s in report.sorted_maximal():
        _emit(format_sequence(s))
    if args.full:
        _emit("# full image")
        for s in report.sorted_all():
            _emit(format_sequence(s))
    return EXIT_OK


def _cmd_decompose(args) -> int:
    x = _parse_seq(args, args.x)
    y = _parse_seq(args, args.y)
    try:
        chain = orders.decompose_into_basic_transfers(x, y)
    except (NotMajorizedError, SumMismatchError) as exc:
        if args.json:
            _emit(json.dumps({"decomposable": False, "reason": str(exc)}))
        else:
            print(f"not decomposable: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.json:
        _emit(
            json.dumps(
                {
                    "decomposable": True,
                    "start": list(chain.start),
                    "steps": [[t.from_rank, t.to_rank] for t in chain.steps],
                },
                sort_keys=True,
            )
        )
    else:
        for t in chain.steps:
            _emit(f"({t.from_rank} → {t.to_rank})")
    return EXIT_OK


def _frac(f) -> str:
    return str(f)


def _cmd_lorenz(args) -> int:
    seq = _parse_seq(args, args.sequence)
    if args.nonnormalized:
        pts = orders.nonnormalized_lorenz_points(seq)
        if args.json:
            _emit(json.dumps({"sequence": list(seq), "points": [list(p) for p in pts]}))
        elif args.csv:
            _emit("x,y\n" + "\n".join(f"{j},{s}" for j, s in pts))
        else:
            for j, s in pts:
                _emit(f"({j}, {s})")
        return EXIT_OK
    curve = orders.lorenz_curve(seq)
    if args.json:
        _emit(
            json.dumps(
                {
                    "sequence": list(seq),
                    "points": [
                        [f"{fx.numerator}/{fx.denominator}", f"{fy.numerator}/{fy.denominator}"]
                        for fx, fy in curve.points
                    ],
                },
                sort_keys=True,
            )
        )
    elif args.csv:
        _emit(curve.to_csv())
    else:
        for fx, fy in curve.points:
            _emit(f"({_frac(fx)}, {_frac(fy)})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq",
        description="Degree-sequence realizability and majorization toolkit",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON record")
    common.add_argument("--quiet", action="store_true", help="suppress stderr notes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="test a sequence for graphicality")
    p.add_argument("sequence", help='comma-separated degrees, e.g. "5,4,4,3,3,3"')
    p.add_argument("--connected", action="store_true", help="also test c-graphicality")
    p.add_argument(
        "--method",
        choices=("eg", "hh", "constant", "certificate"),
        default="eg",
        help="deciding procedure (default: eg)",
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("realize", parents=[common], help="construct a realization")
    p.add_argument("sequence")
    p.add_argument("--connected", action="store_true", help="require a connected realization")
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("compare", parents=[common], help="compare two sequences")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--order", choices=("lorenz", "generalized"), default="generalized")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("construct", parents=[common], help="build a canonical family member")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int, help="edges added to the star; negative for deficits")
    p.add_argument("--prime", action="store_true", help="use the clique-fill family")
    p.add_argument("--emit", choices=("seq", "graph", "both"), default="seq")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("maximal", parents=[common], help="maximal sequences of connected graphs")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--oracle", choices=maximal.ORACLES, default="both")
    p.add_argument("--full", action="store_true", help="also print the full image")
    p.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="raise the enumeration cap (may take very long)",
    )
    p.set_defaults(func=_cmd_maximal)

    p = sub.add_parser("decompose", parents=[common], help="unit-transfer chain between sequences")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("lorenz", parents=[common], help="Lorenz curve of a sequence")
    p.add_argument("sequence")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--nonnormalized", action="store_true")
    p.set_defaults(func=_cmd_lorenz)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (OracleMismatchError, InternalInconsistencyError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (DegseqError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    raise SystemExit(main())
