"""Command line: ``subgraph analyze|census|claims``.

Exit codes: 0 success / theorem agrees, 1 operational error, 2 theorem
mismatch or failed claim check.
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys
from pathlib import Path

from . import harness
from .group import GroupError, default_max_order
from .groupspec import SpecParseError, parse_group_spec
from .lattice import export_dot
from .serialize import AnalysisDocument, write_json, write_jsonl
from .subgroups import DEFAULT_MAX_SUBGROUPS, SubgroupLimitError

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2

log = logging.getLogger("subgraph")

SPEC_HELP = """\
group spec: atom ("x" atom)*, atoms C<n> (cyclic), D<n> (dihedral of order 2n),
S<n>, A<n>, Q8, @<file> (generator or Cayley-table file); x is direct product"""


def _yes(flag: bool) -> str:
    return "true" if flag else "false"


def _summary(a: harness.Analysis) -> str:
    r = a.report
    alpha = ", ".join(f"p={p}: {v}" for p, v in r.alpha_p.items()) or "none"
    witness = "-"
    if r.witness:
        i, j = r.witness
        witness = f"v{i} (order {a.lattice.vertices[i].order}, degree {r.degrees[i]}) vs " \
                  f"v{j} (order {a.lattice.vertices[j].order}, degree {r.degrees[j]})"
    return "\n".join(
        [
            f"group: {a.group.label}",
            f"order: {a.group.order}",
            f"subgroups: {len(a.subgroups)}",
            f"edges: {len(a.lattice.covers)}",
            f"degree sequence: {' '.join(map(str, r.degree_sequence))}",
            f"alpha: {r.alpha} ({alpha})",
            f"regular: {_yes(a.observed)}, predicted: {_yes(a.predicted)}",
            f"witness: {witness}",
        ]
    )


def _analyze_spec(text: str, max_order: int | None, max_subgroups: int) -> harness.Analysis:
    g = parse_group_spec(text).build(max_order)
    return harness.analyze(g, max_subgroups)


def _safe_name(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", label)


def dump_forensics(a: harness.Analysis, directory: str | Path) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    stem = d / f"mismatch-{_safe_name(a.group.label)}"
    dot, js = stem.with_suffix(".dot"), stem.with_suffix(".json")
    dot.write_text(export_dot(a.lattice))
    write_json(AnalysisDocument.from_analysis(a), js)
    return [dot, js]


def cmd_analyze(args: argparse.Namespace) -> int:
    a = _analyze_spec(args.spec, args.max_order, args.max_subgroups)
    print(_summary(a))
    if args.dot:
        Path(args.dot).write_text(export_dot(a.lattice))
    if args.json:
        write_json(AnalysisDocument.from_analysis(a), args.json)
    if not a.match:
        print(f"THEOREM MISMATCH for {a.group.label}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_claims(args: argparse.Namespace) -> int:
    a = _analyze_spec(args.spec, args.max_order, args.max_subgroups)
    print(f"group: {a.group.label} (order {a.group.order})")
    print(f"regular: {_yes(a.observed)}, predicted: {_yes(a.predicted)}")
    for name, res in a.claims.claims.items():
        line = f"{name:16s} {res.status}"
        if res.detail:
            line += f"  {res.detail}"
        if res.witness is not None:
            line += f"  witness={res.witness}"
        print(line)
    if not a.match or a.claims.failures:
        return EXIT_MISMATCH
    return EXIT_OK


def read_corpus(path: str | Path) -> list[str]:
    specs = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            parse_group_spec(line)
        except SpecParseError as exc:
            raise SpecParseError(f"{path}:{lineno}: {exc}") from None
        specs.append(line)
    return specs


def _table(verdict: harness.CensusVerdict) -> str:
    rows = [f"{'spec':<14} {'order':>5} {'subgroups':>9} {'regular':>7} {'predicted':>9}  result"]
    for r in verdict.records:
        if r["status"] != "ok":
            rows.append(f"{r['spec']:<14} {'':>5} {'':>9} {'':>7} {'':>9}  {r['status']}: {r['reason']}")
            continue
        claims_ok = all(c["status"] != harness.FAILS for c in r["claims"].values())
        result = "ok" if r["match"] and claims_ok and all(r["checks"].values()) else "FAIL"
        rows.append(
            f"{r['spec']:<14} {r['order']:>5} {r['n_subgroups']:>9} "
            f"{_yes(r['observed']):>7} {_yes(r['predicted']):>9}  {result}"
        )
    return "\n".join(rows)


def cmd_census(args: argparse.Namespace) -> int:
    corpus = harness.default_corpus(args.max_order)
    if args.corpus:
        corpus += read_corpus(args.corpus)
    verdict = harness.run_census(
        corpus,
        max_order=args.max_order,
        max_subgroups=args.max_subgroups,
        jobs=args.jobs,
        description=f"default corpus to order {args.max_order}"
        + (f" + {args.corpus}" if args.corpus else ""),
    )
    if args.jsonl:
        write_jsonl(verdict.records, args.jsonl)
    if not args.quiet:
        print(_table(verdict))
    ok = sum(r["status"] == "ok" for r in verdict.records)
    print(
        f"census: {verdict.corpus}: {ok} analyzed, {len(verdict.skipped)} skipped, "
        f"{len(verdict.errors)} errors, {len(verdict.mismatches)} mismatches, "
        f"{len(verdict.claim_failures)} claim failures"
    )
    for r in verdict.mismatches:
        a = _analyze_spec(r["spec"], args.max_order, args.max_subgroups)
        paths = dump_forensics(a, args.dump_dir)
        print(f"THEOREM MISMATCH {r['spec']}: wrote {', '.join(map(str, paths))}", file=sys.stderr)
    if verdict.mismatches or verdict.claim_failures:
        return EXIT_MISMATCH
    if verdict.errors:
        return EXIT_ERROR
    return EXIT_OK


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subgraph",
        description="Subgroup graphs of small finite groups and their regularity.",
        epilog=SPEC_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def caps(p: argparse.ArgumentParser, order_default: int | None) -> None:
        p.add_argument("--max-order", type=_positive, default=order_default,
                       help="group order cap (default: $SUBGRAPH_MAX_ORDER or 200)"
                       if order_default is None else f"order cap (default {order_default})")
        p.add_argument("--max-subgroups", type=_positive, default=DEFAULT_MAX_SUBGROUPS)

    p = sub.add_parser("analyze", help="build and analyze one group", epilog=SPEC_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("spec")
    p.add_argument("--dot", metavar="PATH", help="write the subgroup graph as DOT")
    p.add_argument("--json", metavar="PATH", help="write the analysis as JSON")
    caps(p, None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("claims", help="run the claim checks on one group", epilog=SPEC_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("spec")
    caps(p, None)
    p.set_defaults(func=cmd_claims)

    p = sub.add_parser("census", help="verify the theorem over the default corpus")
    caps(p, 100)
    p.add_argument("--corpus", metavar="FILE", help="extra specs, one per line")
    p.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)
    p.add_argument("--jsonl", metavar="PATH", help="write one JSON object per group")
    p.add_argument("--dump-dir", default=".", help="where mismatch DOT/JSON dumps go")
    p.add_argument("-q", "--quiet", action="store_true", help="totals only, no table")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if getattr(args, "max_order", None) is None:
            args.max_order = default_max_order()
        return args.func(args)
    except (GroupError, SubgroupLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
