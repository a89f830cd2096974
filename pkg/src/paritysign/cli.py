"""Command-line entry point.

Subcommands: gen, label, rna, spectrum, realizable, verify, scan, convert.
Exit codes: 0 success, 1 usage/input error, 2 capacity error, 3 a verify
check failed or the scan found a singleton outside the conjectured
families (a discovery, not an error).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import CapacityError, ParitySignError
from .graphs import (
    build_family,
    parse_family,
    parse_graph6,
    read_graph6_file,
    enumerate_connected,
    write_graph6,
)
from .rna import (
    DEFAULT_RESTARTS,
    DEFAULT_SEED,
    closed_form_rna,
    proof_labeling,
    rna_exact,
    rna_heuristic,
    sigma_spectrum,
    to_report,
)
from .signs import (
    all_negative,
    induce_signs,
    is_parity_realizable,
    labeling_from_text,
    labeling_to_text,
    sign_string,
    signed_from_text,
)
from .verify import conjecture_scan, verify_theorems

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_DISCOVERY = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _scalar(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(x) for x in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def emit(records, fmt, out):
    if not records:
        return
    if fmt == "json-lines":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    elif fmt == "csv":
        header = list(records[0].keys())
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for rec in records:
            writer.writerow([_scalar(rec.get(k, "")) for k in header])
    else:  # table
        header = list(records[0].keys())
        rows = [[str(_scalar(rec.get(k, ""))) for k in header] for rec in records]
        widths = [
            max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)
        ]
        out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _input_graphs(args):
    """Yield (descriptor, Graph) from --family / --g6 / --in."""
    sources = [s for s in ("family", "g6", "infile") if getattr(args, s, None)]
    if len(sources) != 1:
        raise _UsageError("exactly one of --family, --g6, --in is required")
    if args.family:
        yield args.family, build_family(parse_family(args.family))
    elif args.g6:
        yield args.g6, parse_graph6(args.g6)
    else:
        for lineno, record in read_graph6_file(args.infile):
            yield f"{args.infile}:{lineno}", parse_graph6(record)


def _add_graph_input(p):
    p.add_argument("--family", help="family spec, e.g. path:6 or complete_bipartite:2,3")
    p.add_argument("--g6", help="inline graph6 record")
    p.add_argument("--in", dest="infile", help="graph6 file, one record per line")


def _add_output(p):
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument(
        "--format",
        choices=["json-lines", "csv", "table"],
        default="json-lines",
    )


def build_parser():
    parser = _Parser(prog="paritysign", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family graph as graph6")
    p.add_argument("--family", required=True)
    p.add_argument("--out")

    p = sub.add_parser("convert", help="round-trip graph6 records")
    _add_graph_input(p)
    p.add_argument("--out")

    p = sub.add_parser("label", help="apply a labeling (or the proof labeling) and show signs")
    _add_graph_input(p)
    p.add_argument("--labels", help="comma-separated labels per vertex; defaults to the proof labeling for --family")
    _add_output(p)

    p = sub.add_parser("rna", help="rna / adhika numbers per graph")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--heuristic", action="store_true")
    p.add_argument("--limit", type=int, default=None, help="exact-size limit override")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)

    p = sub.add_parser("spectrum", help="achievable negative-edge counts per graph")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument("--limit", type=int, default=None)

    p = sub.add_parser("realizable", help="decide parity realizability of signed graphs")
    _add_graph_input(p)
    _add_output(p)
    p.add_argument(
        "--signs",
        help="'+'/'-' per edge in graph6 bit order; defaults to all-negative",
    )

    p = sub.add_parser("verify", help="run the theorem suite")
    _add_output(p)
    p.add_argument("--max-n", type=int, default=6, dest="max_n")

    p = sub.add_parser("scan", help="conjecture scan over enumerated or ingested graphs")
    _add_output(p)
    p.add_argument("--enumerate", type=int, default=None, dest="enumerate_n",
                   help="scan all connected graphs on exactly this many vertices")
    p.add_argument("--in", dest="infile", help="graph6 file to scan")
    p.add_argument("--limit", type=int, default=None)

    return parser


def _open_out(args):
    if getattr(args, "out", None):
        return open(args.out, "w", encoding="utf-8")
    return None


def cmd_gen(args, out):
    g = build_family(parse_family(args.family))
    out.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_convert(args, out):
    status = EXIT_OK
    if args.infile:
        for lineno, record in read_graph6_file(args.infile):
            try:
                out.write(write_graph6(parse_graph6(record)) + "\n")
            except ParitySignError as exc:
                print(f"error: {args.infile}:{lineno}: {exc}", file=sys.stderr)
                status = EXIT_USAGE
        return status
    for desc, g in _input_graphs(args):
        out.write(write_graph6(g) + "\n")
    return status


def cmd_label(args, out):
    records = []
    for desc, g in _input_graphs(args):
        if args.labels:
            labels = labeling_from_text(args.labels, g.n)
        elif args.family:
            labels = proof_labeling(parse_family(args.family))
        else:
            raise _UsageError("--labels is required unless --family is given")
        s = induce_signs(g, labels)
        records.append(
            {
                "graph6": write_graph6(g),
                "labels": labeling_to_text(labels),
                "signs": sign_string(s),
                "negative_edges": len(s.negative_edges()),
            }
        )
    emit(records, args.format, out)
    return EXIT_OK


def cmd_rna(args, out):
    records = []
    for desc, g in _input_graphs(args):
        if args.heuristic:
            result = rna_heuristic(g, seed=args.seed, restarts=args.restarts)
            records.append(to_report(g, result, seed=args.seed))
        else:
            try:
                result = rna_exact(g, limit=args.limit)
            except CapacityError as exc:
                raise CapacityError(f"{desc}: {exc}") from exc
            records.append(to_report(g, result))
    emit(records, args.format, out)
    return EXIT_OK


def cmd_spectrum(args, out):
    records = []
    for desc, g in _input_graphs(args):
        try:
            spec = sigma_spectrum(g, limit=args.limit)
        except CapacityError as exc:
            raise CapacityError(f"{desc}: {exc}") from exc
        rec = to_report(g, spectrum=spec)
        rec["singleton"] = spec.singleton
        records.append(rec)
    emit(records, args.format, out)
    return EXIT_OK


def cmd_realizable(args, out):
    records = []
    for desc, g in _input_graphs(args):
        if args.signs:
            s = signed_from_text(f"{write_graph6(g)} {args.signs}")
        else:
            s = all_negative(g)
        labels = is_parity_realizable(s)
        records.append(
            {
                "graph6": write_graph6(g),
                "signs": sign_string(s),
                "realizable": labels is not None,
                "labels": labeling_to_text(labels) if labels is not None else "",
            }
        )
    emit(records, args.format, out)
    return EXIT_OK


def cmd_verify(args, out):
    checks = verify_theorems(max_n=args.max_n)
    records = []
    for c in checks:
        rec = {"id": c.id, "scope": c.scope, "status": c.status}
        if c.witness is not None:
            rec["witness"] = c.witness
        records.append(rec)
    emit(records, args.format, out)
    return EXIT_OK if all(c.status == "pass" for c in checks) else EXIT_DISCOVERY


def cmd_scan(args, out):
    if (args.enumerate_n is None) == (args.infile is None):
        raise _UsageError("scan needs exactly one of --enumerate or --in")
    if args.enumerate_n is not None:
        graphs = enumerate_connected(args.enumerate_n)
    else:
        parsed = []
        for lineno, record in read_graph6_file(args.infile):
            try:
                parsed.append(parse_graph6(record))
            except ParitySignError as exc:
                print(f"error: {args.infile}:{lineno}: {exc}", file=sys.stderr)
        graphs = parsed
    records, summary = conjecture_scan(graphs, limit=args.limit)
    rows = [
        {
            "record": "conjecture",
            "graph6": r.graph6,
            "n": r.n,
            "m": r.m,
            "spectrum": list(r.spectrum.values),
            "singleton": r.singleton,
            "classification": r.classification,
        }
        for r in records
    ]
    if args.format == "json-lines":
        rows.append({"record": "summary", **summary})
        emit(rows, args.format, out)
    else:
        emit(rows, args.format, out)
        out.write(f"# graphs={summary['graphs']} singletons={summary['singletons']}\n")
        for bucket in ("complete", "odd_star", "other"):
            out.write(f"# {bucket}: {' '.join(summary[bucket])}\n")
        for skip in summary["skipped"]:
            out.write(f"# skipped {skip['graph6']}: {skip['reason']}\n")
    return EXIT_DISCOVERY if summary["other"] else EXIT_OK


_COMMANDS = {
    "gen": cmd_gen,
    "convert": cmd_convert,
    "label": cmd_label,
    "rna": cmd_rna,
    "spectrum": cmd_spectrum,
    "realizable": cmd_realizable,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    fh = None
    try:
        fh = _open_out(args)
        out = fh if fh is not None else sys.stdout
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ParitySignError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if fh is not None:
            fh.close()


if __name__ == "__main__":
    sys.exit(main())
