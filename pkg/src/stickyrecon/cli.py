"""Command-line entry point: ``stickyrecon {tables,simulate,reconstruct,verify,bench}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

from . import bench as _bench
from . import verify as _verify
from .channel import DEFAULT_MAX_STATES, ChannelRng, sample_distinct_reads, transmit
from .combinatorics import ErrorBudget, ball_size_recursive, reads_required
from .errors import StickyReconError
from .reconstruction import Failure, explore, reconstruct
from .runlength import format_sequence, parse_sequence

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILURE = 2


def read_sequences(stream, q=None):
    """One sequence per line; ``#`` starts a comment, blank lines are skipped."""
    out = []
    for line in stream:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_sequence(line, q))
    return out


def _open_in(path):
    if path is None or path == "-":
        return sys.stdin
    return open(path, encoding="utf-8")


def _emit(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _csv(rows, columns):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([row[c] for c in columns])
    return buf.getvalue()


def _json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_tables(args):
    rows = []
    for t in range(args.t_max + 1):
        for s in range(args.s_max + 1):
            for r in range(1, max(1, args.r_max) + 1):
                rows.append({"t": t, "s": s, "r": r, "A": ball_size_recursive(t, s, r), "N": reads_required(t, s, r)})
    text = _json(rows) if args.format == "json" else _csv(rows, ["t", "s", "r", "A", "N"])
    _emit(text, args.out)
    return EXIT_OK


def cmd_simulate(args):
    if args.sequence is not None:
        x = parse_sequence(args.sequence, args.q)
    else:
        with _open_in(args.infile) as fh:
            seqs = read_sequences(fh, args.q)
        if len(seqs) != 1:
            raise StickyReconError(f"expected exactly one input sequence, found {len(seqs)}")
        x = seqs[0]
    budget = ErrorBudget(args.t, args.s)
    rng = ChannelRng(args.seed)
    if args.distinct:
        reads = sample_distinct_reads(x, budget, args.reads, rng, args.work_bound)
    else:
        reads = [transmit(x, budget, rng) for _ in range(args.reads)]
    _emit("".join(format_sequence(y) + "\n" for y in reads), args.out)
    return EXIT_OK


def cmd_reconstruct(args):
    with _open_in(args.infile) as fh:
        reads = read_sequences(fh, args.q)
    if not reads:
        raise StickyReconError("no reads in input")
    budget = ErrorBudget(args.t, args.s)
    if args.mode == "exploratory":
        found = explore(reads, budget, args.r, args.work_bound)
        if isinstance(found, Failure):
            print(f"FAILURE: {found.reason}: {found.detail}", file=sys.stderr)
            return EXIT_FAILURE
        if not found:
            print("FAILURE: NoSatisfyingValue: no center is consistent with every read", file=sys.stderr)
            return EXIT_FAILURE
        if args.format == "json":
            _emit(_json({"status": "candidates", "candidates": [format_sequence(x) for x in found]}), args.out)
        else:
            _emit("".join(format_sequence(x) + "\n" for x in found), args.out)
        return EXIT_OK

    outcome = reconstruct(reads, budget, args.r)
    if isinstance(outcome, Failure):
        if args.format == "json":
            _emit(_json({"status": "failure", "reason": str(outcome.reason), "detail": outcome.detail}), args.out)
        print(f"FAILURE: {outcome.reason}: {outcome.detail}", file=sys.stderr)
        return EXIT_FAILURE
    if args.format == "json":
        _emit(_json({"status": "success", "sequence": format_sequence(outcome.x), "lengths": list(outcome.lengths)}), args.out)
    else:
        _emit(format_sequence(outcome.x) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args):
    results = _verify.run_all(
        args.t_max, args.s_max, args.r_max,
        seed=args.seed, paper_sign=args.paper_sign, max_states=args.work_bound,
    )
    rows = [asdict(r) for r in results]
    cols = ["check", "t", "s", "r", "status", "detail"]
    _emit(_json(rows) if args.format == "json" else _csv(rows, cols), args.out)
    failed = [r for r in results if r.status == _verify.FAIL]
    for r in failed:
        print(f"FAIL {r.check} t={r.t} s={r.s} r={r.r}: {r.detail}", file=sys.stderr)
    return EXIT_FAILURE if failed else EXIT_OK


def cmd_bench(args):
    if args.t is not None or args.s is not None:
        sizes = ((args.t or 0, args.s or 0),)
    else:
        sizes = _bench.DEFAULT_SIZES
    rows = _bench.run_bench(sizes, trials=args.trials, r=args.r or 3, seed=args.seed, timing=args.timing)
    cols = ["t", "s", "r", "trial", "width", "expected", "naive_value", "optimized_value",
            "naive_iterations", "optimized_iterations"]
    if args.timing:
        cols += ["naive_seconds", "optimized_seconds"]
    dicts = [asdict(r) for r in rows]
    _emit(_json(dicts) if args.format == "json" else _csv(dicts, cols), args.out)
    bad = [r for r in rows if not (r.agree and r.within_bound and r.naive_value == r.expected)]
    for r in bad:
        print(f"FAIL bench t={r.t} s={r.s} trial={r.trial}: naive={r.naive_value} "
              f"optimized={r.optimized_value} iterations={r.optimized_iterations}", file=sys.stderr)
    return EXIT_FAILURE if bad else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="stickyrecon", description="Sequence reconstruction over the sticky-insdel channel.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("csv", "json")):
        sp.add_argument("--out", default=None, help="output file (default: stdout)")
        sp.add_argument("--format", choices=fmt, default=fmt[0])

    sp = sub.add_parser("tables", help="A(t,s,r) and reads-required over a box")
    sp.add_argument("--t-max", type=int, default=3)
    sp.add_argument("--s-max", type=int, default=3)
    sp.add_argument("--r-max", type=int, default=5)
    common(sp)
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("simulate", help="sample channel outputs")
    sp.add_argument("sequence", nargs="?", default=None)
    sp.add_argument("--in", dest="infile", default=None)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--q", type=int, default=None, help="alphabet size (default: inferred, at least 4)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--reads", type=int, default=1)
    sp.add_argument("--distinct", action="store_true", help="sample without replacement from the enumerated ball")
    sp.add_argument("--work-bound", type=int, default=DEFAULT_MAX_STATES)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("reconstruct", help="decode a read file")
    sp.add_argument("--in", dest="infile", default=None, help="read file (default: stdin)")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--r", type=int, default=None, help="expected number of runs")
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--mode", choices=("strict", "exploratory"), default="strict")
    sp.add_argument("--work-bound", type=int, default=DEFAULT_MAX_STATES)
    common(sp, fmt=("text", "json"))
    sp.set_defaults(func=cmd_reconstruct)

    sp = sub.add_parser("verify", help="check formulas against brute force")
    sp.add_argument("--t-max", type=int, default=2)
    sp.add_argument("--s-max", type=int, default=2)
    sp.add_argument("--r-max", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--paper-sign", action="store_true", help="use the (-1)^(r-i) sign in the closed form")
    sp.add_argument("--work-bound", type=int, default=DEFAULT_MAX_STATES)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="naive vs optimized run-length search")
    sp.add_argument("--t", type=int, default=None)
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--r", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--timing", action="store_true", help="add wall-clock columns (not reproducible)")
    common(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except StickyReconError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
