"""Command-line entry point.

    cayleydim build --n 5 --set r1,r4,s1 --dot
    cayleydim dim --n 2 --set s0,s1
    cayleydim classify --n 5 --set r1,r4,s1
    cayleydim recognize --n 6 --set r3,s1,s2
    cayleydim verify --from 2 --to 6 --max-set-size 3 --out report.json

Exit codes: 0 success, 1 invalid input, 2 verification disagreement.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .cayley import GraphError, build_cayley, export, is_bipartite, is_connected, is_regular
from .classifier import classify_dim2
from .dihedral import ConnectionSet, DihedralError
from .metric import SearchConfig, SearchError, metric_dimension_exact
from .structure import recognize
from .verify import verify_range

log = logging.getLogger("cayleydim")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREE = 2


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _graph(args):
    S = ConnectionSet.parse(args.set, args.n)
    return S, build_cayley(args.n, S)


def cmd_build(args) -> int:
    S, g = _graph(args)
    if args.dot:
        sys.stdout.write(export(g, "dot"))
    else:
        print(export(g, "json"))
    if not is_connected(g):
        log.warning("%s does not generate D_%d; graph is disconnected", S, 2 * args.n)
    return EXIT_OK


def cmd_dim(args) -> int:
    S, g = _graph(args)
    config = SearchConfig(max_vertices=args.max_vertices, max_k=args.max_k, parallelism=args.jobs)
    res = metric_dimension_exact(g, config)
    _emit(
        {
            "n": args.n,
            "set": str(S),
            "dimension": res.dimension,
            "basis": [g.labels[v] for v in res.basis],
            "lower_bound": res.lower_bound,
            "stats": {"examined": res.stats.examined, "pruned": res.stats.pruned},
        }
    )
    return EXIT_OK


def cmd_classify(args) -> int:
    S = ConnectionSet.parse(args.set, args.n)
    out = {"n": args.n, "set": str(S)}
    out.update(classify_dim2(args.n, S).to_dict())
    _emit(out)
    return EXIT_OK


def cmd_recognize(args) -> int:
    S, g = _graph(args)
    verdict = recognize(g)
    out = {"n": args.n, "set": str(S)}
    out.update(verdict.to_dict())
    out["regular"] = is_regular(g)
    out["bipartite"] = is_bipartite(g)
    if verdict.mapping is not None:
        out["mapping"] = {g.labels[v]: t for v, t in enumerate(verdict.mapping)}
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_from > args.n_to:
        raise DihedralError(f"--from {args.n_from} exceeds --to {args.n_to}")
    config = SearchConfig(max_vertices=args.max_vertices, max_k=args.max_k, parallelism=args.jobs)
    report = verify_range(args.n_from, args.n_to, args.max_set_size, config)
    data = report.to_dict()
    if args.out:
        Path(args.out).write_text(json.dumps(data, indent=1))
        log.info("wrote %d records to %s", len(report.records), args.out)
    _emit(data["summary"])
    return EXIT_DISAGREE if report.disagreements else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    defaults = SearchConfig()
    p = argparse.ArgumentParser(prog="cayleydim", description="Metric dimension of Cayley graphs on dihedral groups.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp):
        sp.add_argument("--n", type=int, required=True, help="rotation order n of D_2n")
        sp.add_argument("--set", required=True, help="connection set, e.g. r1,r4,s0")

    def search_args(sp):
        sp.add_argument("--max-k", type=int, default=defaults.max_k)
        sp.add_argument("--max-vertices", type=int, default=defaults.max_vertices)
        sp.add_argument("--jobs", type=int, default=defaults.parallelism)

    sp = sub.add_parser("build", help="build and export a Cayley graph")
    graph_args(sp)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("dim", help="exact metric dimension")
    graph_args(sp)
    search_args(sp)
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("classify", help="closed-form dimension-two verdict")
    graph_args(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("recognize", help="cycle / prism / Moebius ladder recognition")
    graph_args(sp)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("verify", help="classifier vs solver over a range of n")
    sp.add_argument("--from", dest="n_from", type=int, required=True)
    sp.add_argument("--to", dest="n_to", type=int, required=True)
    sp.add_argument("--max-set-size", type=int, default=3)
    sp.add_argument("--out", help="write the full JSON report here")
    search_args(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (DihedralError, GraphError, SearchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
