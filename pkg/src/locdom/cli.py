"""Command-line interface.

Exit status: 0 on success, 1 on domain errors (bad graph, failed
precondition), 2 on usage errors, 3 when ``verify`` finds a violation or an
extremal-class mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import IO, Iterator, List, Optional, Sequence

from . import families as fam
from . import graph6
from .enumeration import MAX_BUILTIN_ORDER, CensusFilter, enumerate_graphs, import_graph6
from .graph import Graph, GraphError, complement, mask_of, members
from .invariants import InvariantKind, chain_report, min_invariant
from .verifier import (
    Census,
    DerivationError,
    TheoremId,
    census_by_invariant,
    construct_locating_set_diam2,
    transfer_ld_set,
    verify,
)

log = logging.getLogger("locdom")

EXIT_DOMAIN = 1
EXIT_VERIFY = 3

KIND_NAMES = {k.value: k for k in InvariantKind}
FAMILY_NAMES = {f.value: f for f in fam.Family}


def _input_options(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6", action="append", metavar="LINE", help="inline graph6 (repeatable)")
    src.add_argument("--file", metavar="PATH", help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--strict", action="store_true", help="abort on the first malformed input line")


def _output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON instead of aligned text")


def _census_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--cache-dir", metavar="DIR", help="directory for resumable census cache files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locdom",
        description="Exact domination/location invariants and Nordhaus-Gaddum checks for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="compute gamma, beta, eta, lambda with witnesses")
    p.add_argument("--kind", choices=sorted(KIND_NAMES) + ["all"], default="all")
    _input_options(p)
    _output_options(p)

    p = sub.add_parser("complement", help="print the complement of each input graph")
    _input_options(p)
    _output_options(p)

    p = sub.add_parser("family", help="build a named graph or graph family")
    p.add_argument("--name", required=True, choices=sorted(FAMILY_NAMES))
    p.add_argument("--n", type=int, help="order (path, cycle, complete, empty, omega, beta-high)")
    p.add_argument("--r", type=int, help="first size parameter")
    p.add_argument("--s", type=int, help="second size parameter")
    _output_options(p)

    p = sub.add_parser("census", help="list connected classes with a given invariant value")
    p.add_argument("--kind", choices=sorted(KIND_NAMES), required=True)
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--connected", action="store_true", help="restrict to connected graphs")
    p.add_argument("--file", metavar="PATH", help="graph6 census to use instead of built-in generation")
    p.add_argument("--strict", action="store_true")
    _census_options(p)
    _output_options(p)

    p = sub.add_parser("verify", help="check a theorem over the census")
    p.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId] + ["all"])
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--file", metavar="PATH", help="graph6 census supplementing built-in generation")
    p.add_argument("--strict", action="store_true")
    _census_options(p)
    _output_options(p)

    p = sub.add_parser("lemma-construct", help="locating set of size n-4 for diameter-2 doubly-connected graphs")
    p.add_argument("--require-graph", action="store_true", help="always return a set locating the input graph")
    _input_options(p)
    _output_options(p)

    p = sub.add_parser("ld-transfer", help="turn an LD-set of G into an LD-set of its complement")
    p.add_argument("--set", required=True, metavar="V,V,...", help="comma-separated vertex indices")
    _input_options(p)
    _output_options(p)

    p = sub.add_parser("enumerate", help="print one graph per isomorphism class")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--doubly-connected", action="store_true")
    p.add_argument("--file", metavar="PATH", help="filter a graph6 stream instead of generating")
    p.add_argument("--strict", action="store_true")
    _census_options(p)
    _output_options(p)
    return parser


# ---------------------------------------------------------------- input / output


def _open_lines(path: str, stdin: IO[str]) -> List[str]:
    if path == "-":
        return stdin.readlines()
    with open(path) as fh:
        return fh.readlines()


def _graphs(args: argparse.Namespace, stdin: IO[str]) -> Iterator[Graph]:
    if args.graph6:
        for line in args.graph6:
            yield graph6.decode(line)
        return
    lines = _open_lines(args.file, stdin) if args.file else stdin.readlines()
    for _, g in graph6.read_lines(lines, strict=args.strict):
        yield g


def _fmt_set(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


def _emit_json(obj, out: IO[str]) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _table(rows: Sequence[Sequence[str]], out: IO[str]) -> None:
    if not rows:
        return
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


# ---------------------------------------------------------------- subcommands


def cmd_invariant(args, out, stdin) -> int:
    kinds = list(InvariantKind) if args.kind == "all" else [KIND_NAMES[args.kind]]
    records = []
    rows = []
    for g in _graphs(args, stdin):
        code = graph6.encode_str(g)
        entry = {"graph6": code, "order": g.n}
        for k in kinds:
            res = min_invariant(g, k)
            entry[k.value] = {"value": res.value, "witness": list(res.vertices)}
            rows.append([code, k.value, str(res.value), _fmt_set(res.witness)])
        if args.kind == "all":
            entry["chain_holds"] = chain_report(g).holds
        records.append(entry)
    if args.json:
        _emit_json(records, out)
    else:
        _table([["graph6", "kind", "value", "witness"]] + rows, out)
    return 0


def cmd_complement(args, out, stdin) -> int:
    codes = [graph6.encode_str(complement(g)) for g in _graphs(args, stdin)]
    if args.json:
        _emit_json(codes, out)
    else:
        for c in codes:
            out.write(c + "\n")
    return 0


def cmd_family(args, out, stdin) -> int:
    spec = fam.FamilySpec(FAMILY_NAMES[args.name], n=args.n, r=args.r, s=args.s)
    graphs = fam.build(spec)
    codes = [graph6.encode_str(g) for g in graphs]
    if args.json:
        _emit_json([{"graph6": c, "order": g.n, "edges": [list(e) for e in g.edges()]}
                    for c, g in zip(codes, graphs)], out)
    else:
        for c in codes:
            out.write(c + "\n")
    return 0


def _census_source(args, stdin) -> Census:
    imported = None
    if getattr(args, "file", None):
        lines = _open_lines(args.file, stdin)
        imported = [g for _, g in graph6.read_lines(lines, strict=args.strict)]
    return Census(cache_dir=args.cache_dir, jobs=args.jobs, imported=imported)


_PROFILE_COLUMNS = ["graph6", "n", "gamma", "beta", "eta", "lambda", "diam", "co-diam", "conn", "co-conn"]


def _profile_row(rec) -> List[str]:
    return [rec.graph6, str(rec.order), str(rec.gamma), str(rec.beta), str(rec.eta), str(rec.lam),
            str(rec.diameter), str(rec.complement_diameter),
            "yes" if rec.connected else "no", "yes" if rec.complement_connected else "no"]


def cmd_census(args, out, stdin) -> int:
    source = _census_source(args, stdin)
    recs = census_by_invariant(KIND_NAMES[args.kind], args.value, args.max_n, args.connected, source, args.min_n)
    if args.json:
        _emit_json({"kind": args.kind, "value": args.value, "count": len(recs),
                    "records": [r.to_json() for r in recs]}, out)
    else:
        _table([_PROFILE_COLUMNS] + [_profile_row(r) for r in recs], out)
        log.info("%d classes", len(recs))
    return 0


def cmd_verify(args, out, stdin) -> int:
    source = _census_source(args, stdin)
    ids = list(TheoremId) if args.theorem == "all" else [TheoremId(args.theorem)]
    orders = range(args.min_n, args.max_n + 1)
    reports = [verify(t, orders, source) for t in ids]
    failed = any(not r.ok for r in reports)
    if args.json:
        payload = [r.to_json() for r in reports]
        _emit_json(payload[0] if len(payload) == 1 else payload, out)
    else:
        rows = [["theorem", "orders", "graphs", "violations", "extremal", "status"]]
        for r in reports:
            has_classes = bool(r.expected or r.found)
            rows.append([
                r.theorem.value,
                f"{r.orders[0]}..{r.orders[-1]}",
                str(sum(r.counts.values())),
                str(len(r.violations)),
                ("match" if r.match else "MISMATCH") if has_classes else "-",
                "PASS" if r.ok else "FAIL",
            ])
        _table(rows, out)
        for r in reports:
            for v in r.violations[:20]:
                sys.stderr.write(f"{r.theorem.value}: n={v.order} {v.graph6}: {v.message}\n")
            if not r.match:
                extra = sorted(set(r.found) - set(r.expected))
                missing = sorted(set(r.expected) - set(r.found))
                sys.stderr.write(f"{r.theorem.value}: unexpected {extra}, missing {missing}\n")
    return EXIT_VERIFY if failed else 0


def cmd_lemma(args, out, stdin) -> int:
    rows = [["graph6", "target", "size", "set"]]
    records = []
    for g in _graphs(args, stdin):
        target, s = construct_locating_set_diam2(g, require_graph=args.require_graph)
        code = graph6.encode_str(g)
        records.append({"graph6": code, "target": target.value, "size": s.bit_count(), "set": list(members(s))})
        rows.append([code, target.value, str(s.bit_count()), _fmt_set(s)])
    if args.json:
        _emit_json(records, out)
    else:
        _table(rows, out)
    return 0


def _parse_set(text: str, n: int) -> int:
    try:
        verts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise GraphError(f"cannot parse vertex set {text!r}")
    for v in verts:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for order {n}")
    return mask_of(verts)


def cmd_ld_transfer(args, out, stdin) -> int:
    rows = [["graph6", "input", "complement-LD-set"]]
    records = []
    for g in _graphs(args, stdin):
        s = _parse_set(args.set, g.n)
        t = transfer_ld_set(g, s)
        code = graph6.encode_str(g)
        records.append({"graph6": code, "input": list(members(s)), "result": list(members(t))})
        rows.append([code, _fmt_set(s), _fmt_set(t)])
    if args.json:
        _emit_json(records, out)
    else:
        _table(rows, out)
    return 0


def cmd_enumerate(args, out, stdin) -> int:
    lo = args.min_n if args.min_n is not None else args.max_n
    filt = CensusFilter(
        connected=True if args.connected else None,
        doubly_connected=True if args.doubly_connected else None,
        min_order=lo,
        max_order=args.max_n,
    )
    if args.file:
        graphs = list(import_graph6(_open_lines(args.file, stdin), filt, strict=args.strict))
    else:
        if args.max_n > MAX_BUILTIN_ORDER:
            raise GraphError(f"built-in generation stops at order {MAX_BUILTIN_ORDER}; use --file")
        graphs = [g for n in range(lo, args.max_n + 1)
                  for g in enumerate_graphs(n, filt, args.cache_dir, args.jobs)]
    codes = [graph6.encode_str(g) for g in graphs]
    if args.json:
        _emit_json(codes, out)
    else:
        for c in codes:
            out.write(c + "\n")
    return 0


COMMANDS = {
    "invariant": cmd_invariant,
    "complement": cmd_complement,
    "family": cmd_family,
    "census": cmd_census,
    "verify": cmd_verify,
    "lemma-construct": cmd_lemma,
    "ld-transfer": cmd_ld_transfer,
    "enumerate": cmd_enumerate,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[IO[str]] = None, stdin: Optional[IO[str]] = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        parser.print_usage(sys.stderr)
        sys.stderr.write("locdom: error: --jobs must be positive\n")
        return 2
    try:
        return COMMANDS[args.command](args, out, stdin)
    except (GraphError, DerivationError, ValueError) as exc:
        sys.stderr.write(f"locdom: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        sys.stderr.write(f"locdom: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    sys.exit(run())


if __name__ == "__main__":
    main()
