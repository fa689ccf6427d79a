"""Budgeted searches on C(2,k) instances with no construction behind them.

Appends one JSON record per run (config plus full search stats) to the log
file, so any decisive answer is kept together with the evidence for it.

    python scripts/hunt_open_cases.py --node-limit 100000000 --log hunt.jsonl
"""
import argparse
import datetime
import json
import sys
from pathlib import Path

from leapertours import Closure, Expect, Ordering, SearchConfig, find_tours, verify_tour, write_tour_file

CASES = [(10, 9), (14, 13)]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--node-limit", type=int, default=10**8)
    parser.add_argument("--time-limit", type=float, default=None)
    parser.add_argument("--ordering", choices=[o.value for o in Ordering], default="lexicographic")
    parser.add_argument("--open", action="store_true")
    parser.add_argument("--case", action="append", metavar="K,D",
                        help="override the default instances, e.g. --case 10,9")
    parser.add_argument("--log", type=Path, default=Path("hunt.jsonl"))
    parser.add_argument("--tours", type=Path, default=None, help="directory for found tours")
    args = parser.parse_args()
    cases = [tuple(map(int, c.split(","))) for c in args.case] if args.case else CASES
    mode = Closure.OPEN if args.open else Closure.CLOSED

    for k, d in cases:
        config = SearchConfig(k, d, mode=mode, node_limit=args.node_limit,
                              time_limit=args.time_limit, ordering=Ordering(args.ordering))

        def progress(stats, k=k, d=d):
            print(f"C(2,{k}) d={d}: {stats.nodes} nodes, depth {stats.max_depth}", file=sys.stderr)

        outcome = find_tours(config, progress=progress)
        record = {
            "when": datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
            "k": k, "d": d, "mode": mode.value, "ordering": args.ordering,
            "node_limit": args.node_limit, "time_limit": args.time_limit,
            **outcome.record(),
        }
        if outcome.note:
            record["note"] = outcome.note
        for tour in outcome.tours:
            record["verified"] = verify_tour(tour, d, Expect(mode.value)).status.value
            if args.tours is not None:
                args.tours.mkdir(parents=True, exist_ok=True)
                name = args.tours / f"d{d}-k{k}-{mode.value}.txt"
                name.write_bytes(write_tour_file(tour))
                record["tour_file"] = str(name)
        with args.log.open("a") as fh:
            fh.write(json.dumps(record) + "\n")
        print(json.dumps(record))


if __name__ == "__main__":
    main()
