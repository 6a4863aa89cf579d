"""Command line front end.

Subcommands: synth (build a graph of prescribed toughness plus its
certificate), verify (check a graph/certificate pair), tau / hamilton /
alpha (run the exact oracles on a graph file), and block (emit one of
the named building blocks).  Graph files may be graph6, the JSON edge
schema, or the plain "n m" + edge-per-line text format; output format
is chosen with --format (default g6).  "-" means stdin for graph
arguments and stdout for --out/--cert, so subcommands compose in pipes.

Exit codes: 0 success or accepted, 1 verification rejected, 2
operational errors (unreadable input, out-of-range targets, oracle size
limits).  Identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .blocks import BlockKind, block, inflate_triangles, petersen, unit_toughness_graph
from .graphs import (
    Graph,
    GraphFormatError,
    decode_graph6,
    encode_graph6,
    from_edge_json,
    make_graph,
    to_dot,
    to_edge_json,
)
from .oracles import (
    SizeLimitError,
    has_hamilton_path,
    independence_number,
    is_hamiltonian,
    toughness_exact,
    toughness_upper_search,
)
from .synth import CertificateError, certificate_from_json, certificate_to_json, parse_rational, synthesize
from .verify import OracleLimits, check_certificate

__all__ = ["main"]

_FORMATS = ("g6", "dot", "edges", "json")


def _render(g: Graph, fmt: str, highlight=()) -> str:
    if fmt == "g6":
        return encode_graph6(g).decode("ascii") + "\n"
    if fmt == "dot":
        return to_dot(g, highlight)
    if fmt == "edges":
        lines = [f"{g.n} {g.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return to_edge_json(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    stripped = text.strip()
    if not stripped:
        raise GraphFormatError(f"{path}: empty graph file")
    if stripped[0] == "{":
        # graph6 strings for n = 60 also start with "{", so only treat
        # the file as JSON when it actually parses as JSON
        try:
            json.loads(stripped)
        except json.JSONDecodeError:
            pass
        else:
            return from_edge_json(stripped)
    lines = stripped.splitlines()
    head = lines[0].split()
    if len(head) == 2 and all(tok.isdigit() for tok in head):
        n, m = (int(tok) for tok in head)
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2 or not all(tok.isdigit() for tok in parts):
                raise GraphFormatError(f"{path}: bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        if len(edges) != m:
            raise GraphFormatError(f"{path}: header says {m} edges, found {len(edges)}")
        try:
            return make_graph(n, edges)
        except ValueError as exc:
            raise GraphFormatError(f"{path}: {exc}") from None
    return decode_graph6(lines[0])


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_synth(args) -> int:
    t = parse_rational(args.t)
    g, cert = synthesize(t)
    if args.out:
        _emit(_render(g, args.format), args.out)
    if args.cert:
        _emit(certificate_to_json(cert), args.cert)
    # keep stdout clean for piping when the graph itself goes there
    stream = sys.stderr if args.out == "-" or args.cert == "-" else sys.stdout
    print(
        f"case={cert.plan.case_id} q={cert.plan.q} n={cert.n} tau={cert.plan.t}",
        file=stream,
    )
    return 0


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    cert = certificate_from_json(Path(args.cert).read_text())
    limits = OracleLimits(
        toughness_n=args.max_oracle_n,
        hamilton_nodes=args.budget,
        workers=args.threads,
    )
    report = check_certificate(g, cert, limits)
    sys.stdout.write(report.to_json())
    return 0 if report.accepted else 1


def _cmd_tau(args) -> int:
    g = _read_graph(args.graph)
    try:
        res = toughness_exact(g, max_n=args.max_n, workers=args.threads)
    except SizeLimitError:
        witness = toughness_upper_search(g, budget=args.budget)
        if witness is None:
            print(
                f"error: n={g.n} exceeds the exact limit {args.max_n} and the "
                "heuristic found no cutset",
                file=sys.stderr,
            )
            return 2
        payload = {
            "exact": False,
            "tau_upper_bound": f"{witness.ratio.numerator}/{witness.ratio.denominator}",
            "cutset": sorted(witness.cutset),
            "components": witness.component_count,
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    if res.is_infinite:
        payload = {"exact": True, "tau": "infinite", "cutset": None, "components": None}
    else:
        payload = {
            "exact": True,
            "tau": f"{res.value.numerator}/{res.value.denominator}",
            "cutset": sorted(res.witness.cutset),
            "components": res.witness.component_count,
        }
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_hamilton(args) -> int:
    g = _read_graph(args.graph)
    if args.path is not None:
        x, y = args.path
        r = has_hamilton_path(g, x, y, node_limit=args.budget)
        names = ("spanning path found", "no spanning path (exhaustive)")
        mode = "path"
    else:
        r = is_hamiltonian(g, node_limit=args.budget)
        names = ("hamiltonian", "nonhamiltonian (exhaustive)")
        mode = "cycle"
    if r.verdict is None:
        summary = "unknown (budget exhausted)"
    else:
        summary = names[0] if r.verdict else names[1]
    payload = {
        "mode": mode,
        "verdict": r.verdict,
        "summary": summary,
        "method": r.method,
        "nodes": r.nodes,
        "witness": list(r.witness) if r.witness else None,
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_alpha(args) -> int:
    g = _read_graph(args.graph)
    alpha = independence_number(g, max_n=args.max_n)
    print(json.dumps({"alpha": alpha}, sort_keys=True))
    return 0


def _named_graph(kind: str) -> tuple[Graph, tuple[int, ...]]:
    if kind in ("l1", "l2", "l3", "l4"):
        b = block(BlockKind(kind.upper()))
        return b.graph, (b.x, b.y)
    if kind == "unit":
        return unit_toughness_graph(), ()
    if kind == "petersen":
        return petersen(), ()
    if kind == "inflated-petersen":
        return inflate_triangles(petersen()), ()
    raise ValueError(f"unknown block kind {kind!r}")


def _cmd_block(args) -> int:
    g, highlight = _named_graph(args.kind)
    _emit(_render(g, args.format, highlight=highlight), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toughgraph",
        description=(
            "Construct nonhamiltonian graphs of exact rational toughness "
            "t in (0, 9/4), with certificates, verification, and exact oracles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="build a graph with toughness exactly t")
    p.add_argument("t", help="target toughness, written a/b or a")
    p.add_argument("--out", help="write the graph to this file")
    p.add_argument("--cert", help="write the certificate JSON to this file")
    p.add_argument("--format", choices=_FORMATS, default="g6")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("verify", help="check a graph/certificate pair")
    p.add_argument("graph")
    p.add_argument("cert")
    p.add_argument("--max-oracle-n", type=int, default=24,
                   help="largest n for the exact toughness recheck")
    p.add_argument("--budget", type=int, default=10_000_000,
                   help="node budget for exhaustive Hamilton search")
    p.add_argument("--threads", type=int, default=1,
                   help="worker processes for the toughness enumeration")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("tau", help="exact toughness (heuristic bound past --max-n)")
    p.add_argument("graph")
    p.add_argument("--max-n", type=int, default=24)
    p.add_argument("--budget", type=int, default=2000,
                   help="evaluations for the heuristic fallback")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("hamilton", help="Hamilton cycle or spanning path search")
    p.add_argument("graph")
    p.add_argument("--path", nargs=2, type=int, metavar=("X", "Y"),
                   help="look for a spanning path between these vertices")
    p.add_argument("--budget", type=int, default=10_000_000)
    p.set_defaults(func=_cmd_hamilton)

    p = sub.add_parser("alpha", help="independence number")
    p.add_argument("graph")
    p.add_argument("--max-n", type=int, default=48)
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("block", help="emit a named building block")
    p.add_argument("kind",
                   choices=("l1", "l2", "l3", "l4", "unit", "petersen",
                            "inflated-petersen"))
    p.add_argument("--out")
    p.add_argument("--format", choices=_FORMATS, default="g6")
    p.set_defaults(func=_cmd_block)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, CertificateError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
