"""Command line interface.

Exit codes: 0 when a result was delivered, 1 when ``verify`` rejects a tour,
2 for usage errors (bad flags, unreadable input for commands other than
verify).  ``--json`` switches every subcommand to one JSON record per line.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import construct, feasibility, rules, search, tourio
from .errors import LeaperError
from .model import Closure, LeaperSpec


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return value


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} must not be negative")
    return value


def _seconds(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("time limit must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leapertours",
        description="Feasibility, search, construction and verification of leaper tours on C(2,k).",
    )
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON records")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("feasibility", help="classify an (a,b)-leaper on C(2,k)")
    p.add_argument("--a", type=_natural, required=True)
    p.add_argument("--b", type=_natural, required=True)
    p.add_argument("--k", type=_positive, required=True)

    p = sub.add_parser("rules", help="list moving rules of squared length L")
    p.add_argument("--length", type=_positive, required=True)
    p.add_argument("--max-component", type=_positive, required=True)
    p.add_argument("--max-length", type=_positive, required=True)

    p = sub.add_parser("search", help="search for a tour of the Hamming-d graph on C(2,k)")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--open", action="store_true", help="look for open tours instead of closed ones")
    p.add_argument("--node-limit", type=_positive, default=search.DEFAULT_NODE_LIMIT)
    p.add_argument("--time-limit", type=_seconds, default=None, metavar="SECONDS")
    p.add_argument("--count", type=_positive, default=1, help="number of tours wanted")
    p.add_argument("--all", action="store_true", help="enumerate every tour (overrides --count)")
    p.add_argument("--ordering", choices=[o.value for o in search.Ordering],
                   default=search.Ordering.LEXICOGRAPHIC.value)
    p.add_argument("--no-symmetry", action="store_true", help="disable symmetry breaking")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--progress-every", type=_positive, default=10**7, metavar="NODES")
    p.add_argument("--out", type=Path, help="tour file; further tours go to FILE-2, FILE-3, ...")

    p = sub.add_parser("gray", help="construct the Gray code wazir tour")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--out", type=Path)

    p = sub.add_parser("lift", help="lift a closed tour to a higher dimension")
    p.add_argument("--in", dest="infile", required=True, help="tour file, '-' for stdin")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--target-k", type=_positive, required=True)
    p.add_argument("--out", type=Path)

    p = sub.add_parser("verify", help="check a tour file")
    p.add_argument("--in", dest="infile", required=True, help="tour file, '-' for stdin")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--expect", choices=[e.value for e in tourio.Expect], default="either")
    p.add_argument("--strip", action="store_true",
                   help="drop prose lines and a repeated closing vertex before parsing")
    return parser


class _Output:
    def __init__(self, machine: bool, stdout, stderr):
        self.machine = machine
        self.stdout = stdout
        self.stderr = stderr

    def emit(self, record: dict, human: str):
        if self.machine:
            self.stdout.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            self.stdout.write(human + "\n")


def _read_input(name: str, stdin) -> bytes:
    if name == "-":
        data = stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read()
        return data.encode() if isinstance(data, str) else data
    try:
        return Path(name).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {name}: {exc.strerror}") from None


def _write_tour(tour, path: Path | None, stdout):
    data = tourio.write_tour_file(tour)
    if path is None:
        if hasattr(stdout, "buffer"):
            stdout.flush()
            stdout.buffer.write(data)
            stdout.buffer.flush()
        else:
            stdout.write(data.decode("ascii"))
    else:
        path.write_bytes(data)


def _numbered(path: Path, i: int) -> Path:
    return path if i == 0 else path.with_name(f"{path.stem}-{i + 1}{path.suffix}")


def _cmd_feasibility(args, out: _Output, streams) -> int:
    verdict = feasibility.classify(LeaperSpec(args.a, args.b), args.k)
    record = {
        "command": "feasibility",
        "a": args.a, "b": args.b, "k": args.k,
        "status": verdict.status.value,
        "reason": verdict.reason,
        "parity_class_sizes": list(verdict.parity_class_sizes),
    }
    out.emit(record, f"{verdict.status.value}: {verdict.reason}")
    return 0


def _cmd_rules(args, out: _Output, streams) -> int:
    found = rules.enumerate_rules(args.length, args.max_component, args.max_length)
    listed = [list(r.deltas) for r in found]
    human = "\n".join(str(r) for r in found) if found else "(no moving rules)"
    out.emit({"command": "rules", "length": args.length, "rules": listed}, human)
    return 0


def _cmd_search(args, out: _Output, streams) -> int:
    config = search.SearchConfig(
        k=args.k,
        d=args.d,
        mode=Closure.OPEN if args.open else Closure.CLOSED,
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        ordering=search.Ordering(args.ordering),
        symmetry_breaking=not args.no_symmetry,
        solutions_wanted=None if args.all else args.count,
    )
    stderr = streams[2]

    def report(stats):
        stderr.write(
            f"[search k={args.k} d={args.d}] {stats.nodes} nodes, depth {stats.max_depth}, "
            f"{stats.backtracks} backtracks, {stats.elapsed_ms / 1e3:.1f} s\n"
        )
        stderr.flush()

    if args.jobs > 1:
        outcome = search.find_tours_parallel(config, args.jobs)
    else:
        outcome = search.find_tours(config, progress=report, progress_interval=args.progress_every)
    if args.out is not None:
        for i, tour in enumerate(outcome.tours):
            _write_tour(tour, _numbered(args.out, i), None)
    record = {"command": "search", "k": args.k, "d": args.d,
              "mode": config.mode.value, **outcome.record()}
    if outcome.note:
        record["note"] = outcome.note
    human = (f"{outcome.verdict.value}: {len(outcome.tours)} tour(s); nodes={outcome.stats.nodes} "
             f"depth={outcome.stats.max_depth} backtracks={outcome.stats.backtracks} "
             f"elapsed={outcome.stats.elapsed_ms:.1f} ms")
    if outcome.note:
        human += f"\n{outcome.note}"
    out.emit(record, human)
    return 0


def _tour_record(command: str, tour, path) -> dict:
    return {"command": command, "k": tour.k, "d": tour.step, "vertices": len(tour),
            "out": str(path) if path else None}


def _cmd_gray(args, out: _Output, streams) -> int:
    tour = construct.gray_tour(args.k)
    _write_tour(tour, args.out, streams[1])
    if args.out is not None:
        out.emit(_tour_record("gray", tour, args.out), f"wrote {len(tour)} vertices to {args.out}")
    return 0


def _cmd_lift(args, out: _Output, streams) -> int:
    source = tourio.parse_tour_file(_read_input(args.infile, streams[0]))
    tour = construct.lift_to(source, args.d, args.target_k)
    _write_tour(tour, args.out, streams[1])
    if args.out is not None:
        out.emit(_tour_record("lift", tour, args.out), f"wrote {len(tour)} vertices to {args.out}")
    return 0


def _cmd_verify(args, out: _Output, streams) -> int:
    raw = _read_input(args.infile, streams[0])
    if args.strip:
        raw = tourio.strip_prose(raw)
    try:
        tour = tourio.parse_tour_file(raw)
    except LeaperError as exc:
        out.emit({"command": "verify", "status": tourio.ReportStatus.INVALID.value,
                  "violation": "FormatError", "index": getattr(exc, "line", None), "detail": str(exc)},
                 f"Invalid: unreadable tour file ({exc})")
        return 1
    report = tourio.verify_tour(tour, args.d, tourio.Expect(args.expect))
    record = {"command": "verify", "k": tour.k, "d": args.d, "vertices": len(tour),
              "status": report.status.value, "step": report.step,
              "closing_distance": report.closing_distance,
              "violation": report.violation.kind.value if report.violation else None,
              "index": report.violation.index if report.violation else None}
    human = f"{report.status.value} (k={tour.k}, {len(tour)} vertices, step {report.step})"
    if report.violation:
        v = report.violation
        human = f"{report.status.value}: {v.kind.value} at position {v.index}: {v.detail}"
    out.emit(record, human)
    return 0 if report.valid else 1


_COMMANDS = {
    "feasibility": _cmd_feasibility,
    "rules": _cmd_rules,
    "search": _cmd_search,
    "gray": _cmd_gray,
    "lift": _cmd_lift,
    "verify": _cmd_verify,
}


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Output(args.json, stdout, stderr)
    try:
        return _COMMANDS[args.command](args, out, (stdin, stdout, stderr))
    except (UsageError, LeaperError) as exc:
        stderr.write(f"leapertours {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
