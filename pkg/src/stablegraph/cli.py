"""Command-line front end.

Exit codes: 0 success or verification pass, 1 verification failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import List, Optional

from . import stg
from .enumeration import (
    EnumerationError,
    GraphFamily,
    WeightStrategy,
    default_budget,
    enumerate_family,
    family_stats,
    phi_fibers,
    _digest,
)
from .graph import GraphError, genus
from .verify import DEFAULT_CAP, SUITES, GenusBelowBetaError, run_paper_examples, run_suite
from .weak import WeakParams, index_vector, maximal_weak_subgraph, phi_map

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    subcommand: str
    k: Optional[int] = None
    g: Optional[int] = None
    n: Optional[int] = None
    strategy: Optional[str] = None
    seed: int = 0
    input: Optional[str] = None
    output: Optional[str] = None
    flags: dict = field(default_factory=dict)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _load_graph(path: str, g: Optional[int] = None):
    try:
        G = stg.load(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    except stg.STGError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if g is not None and genus(G) != g:
        raise UsageError(f"{path}: graph has genus {genus(G)}, --g says {g}")
    return G


def _load_family(path: str) -> GraphFamily:
    try:
        return GraphFamily.load(path)
    except FileNotFoundError as exc:
        raise UsageError(f"{path}: no family manifest ({exc.filename})") from None
    except (stg.STGError, KeyError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _strategy(args) -> WeightStrategy:
    try:
        return WeightStrategy.parse(args.strategy, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_weak(args) -> int:
    p = WeakParams(args.k)
    G = _load_graph(args.input, args.g)
    W = maximal_weak_subgraph(G, p)
    lines = ["{" + ",".join(map(str, sorted(W))) + "}"]
    for m in range(p.max_vertices + 1):
        value = p.phi(m)
        lines.append(f"phi_{p.k}({m}) = {value} ~ {float(value):.4f}")
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_phi(args) -> int:
    G = _load_graph(args.input)
    _emit(stg.dumps_canonical(phi_map(G, WeakParams(args.k))))
    return EXIT_OK


def cmd_index(args) -> int:
    G = _load_graph(args.input)
    _emit(str(index_vector(G, WeakParams(args.k))))
    return EXIT_OK


def _build_family(args) -> GraphFamily:
    p = WeakParams(args.k)
    budget = args.budget if args.budget is not None else default_budget()
    return enumerate_family(p, args.g, args.n, _strategy(args), budget)


def cmd_enumerate(args) -> int:
    family = _build_family(args)
    out = args.out or f"family-k{args.k}-g{args.g}-n{args.n}"
    family.save(out)
    manifest = family.manifest()
    del manifest["members"]
    manifest["directory"] = str(out)
    _emit(_json(manifest))
    return EXIT_OK


def cmd_fibers(args) -> int:
    family = _load_family(args.family)
    if family.k != args.k:
        raise UsageError(f"family was enumerated for k={family.k}, not k={args.k}")
    p = WeakParams(args.k)
    fibers = phi_fibers(family, p)
    out = {
        _digest(key): {
            "image": key.decode("utf-8"),
            "members": [_digest(m) + ".stg" for m in members],
        }
        for key, members in fibers.items()
    }
    _emit(_json(out))
    return EXIT_OK


def cmd_stats(args) -> int:
    family = _load_family(args.family)
    _emit(_json(family_stats(family, family.params)))
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = None
    if args.suite:
        suites = [s.strip() for s in args.suite.split(",") if s.strip()]
        unknown = [s for s in suites if s not in SUITES]
        if unknown:
            raise UsageError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    p = WeakParams(args.k)
    if args.g <= p.beta and not args.force:
        raise UsageError(f"genus {args.g} <= beta = {p.beta} (~{float(p.beta):.1f}); "
                         "pass --force to run below the bound")
    family = _build_family(args)
    cap = None if args.full_dump else args.cap
    report = run_suite(family, p, suites, force=args.force, cap=cap)
    manifest = RunManifest("verify", args.k, args.g, args.n, family.strategy.describe(),
                           args.seed, output=args.report,
                           flags={"force": args.force, "budget": args.budget, "cap": cap,
                                  "suites": suites})
    doc = report.to_dict()
    doc["manifest"] = asdict(manifest)
    text = _json(doc)
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    _emit(text)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_examples(args) -> int:
    report = run_paper_examples()
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablegraph",
        description="Stable graphs, maximal weak subgraphs and the contraction partition.")
    sub = parser.add_subparsers(dest="command", required=True)

    def nonneg(text):
        value = int(text)
        if value < 0:
            raise argparse.ArgumentTypeError("must be non-negative")
        return value

    s = sub.add_parser("weak", help="maximal weak subgraph and the threshold table")
    s.add_argument("--k", type=nonneg, required=True)
    s.add_argument("--g", type=nonneg)
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_weak)

    s = sub.add_parser("phi", help="image of a graph under the contraction map, as STG")
    s.add_argument("--k", type=nonneg, required=True)
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("index", help="index vector of a graph")
    s.add_argument("--k", type=nonneg, required=True)
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_index)

    def family_args(s):
        s.add_argument("--k", type=nonneg, required=True)
        s.add_argument("--g", type=nonneg, required=True)
        s.add_argument("--n", type=nonneg, required=True)
        s.add_argument("--strategy", default="exhaustive",
                       help="exhaustive | sample:COUNT | boundary:W1,W2,...")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--budget", type=nonneg, default=None,
                       help="max exhaustive weight assignments (default from $STABLEGRAPH_BUDGET or 10^7)")

    s = sub.add_parser("enumerate", help="enumerate a family into a directory of STG files")
    family_args(s)
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("fibers", help="fibers of the contraction map over a saved family")
    s.add_argument("--k", type=nonneg, required=True)
    s.add_argument("--family", required=True)
    s.set_defaults(func=cmd_fibers)

    s = sub.add_parser("verify", help="run the property suites; exit 1 on any failure")
    family_args(s)
    s.add_argument("--suite", help="comma-separated subset of: " + ", ".join(SUITES))
    s.add_argument("--force", action="store_true", help="allow genus <= beta (non-normative)")
    s.add_argument("--cap", type=nonneg, default=DEFAULT_CAP, help="counterexamples kept per suite")
    s.add_argument("--full-dump", action="store_true", help="keep every counterexample")
    s.add_argument("--report", help="also write the JSON report here")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("examples", help="check the worked examples")
    s.set_defaults(func=cmd_examples)

    s = sub.add_parser("stats", help="summary statistics of a saved family")
    s.add_argument("--family", required=True)
    s.set_defaults(func=cmd_stats)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, EnumerationError, GenusBelowBetaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
