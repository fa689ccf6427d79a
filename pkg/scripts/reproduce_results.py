"""Rebuild every tour result on C(2,k) and write the tours to disk.

    python scripts/reproduce_results.py --out results/

Covers the Gray code wazir tours, the threeleaper (d = 9) and zebra (d = 13)
searches with their lifts, the degenerate two-cycle cases, and a feasibility
table for the (a, b) leapers with a, b <= 3.
"""
import argparse
import itertools
import json
import time
from pathlib import Path

from leapertours import (
    Expect,
    LeaperSpec,
    SearchConfig,
    classify,
    find_tours,
    gray_tour,
    lift_to,
    verify_tour,
    write_tour_file,
)


def save(out: Path, name: str, tour, d: int) -> dict:
    report = verify_tour(tour, d, Expect.CLOSED)
    (out / name).write_bytes(write_tour_file(tour))
    return {"file": name, "k": tour.k, "d": d, "status": report.status.value}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--max-lift", type=int, default=17, help="highest k for lifted tours")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    log = []

    print("feasibility on C(2,k), k = 16")
    for a, b in itertools.product(range(4), repeat=2):
        if (a, b) != (0, 0) and a <= b:
            v = classify(LeaperSpec(a, b), 16)
            print(f"  ({a},{b})  L={a * a + b * b:<3} {v.status.value}")

    for k in (1, 2, 3, 10, 20):
        log.append(save(args.out, f"wazir-k{k}.txt", gray_tour(k), 1))

    for k, d in [(9, 9), (13, 13), (11, 9), (15, 13), (10, 9), (14, 13)]:
        began = time.perf_counter()
        outcome = find_tours(SearchConfig(k, d, node_limit=10**9))
        entry = {"search": f"C(2,{k}) d={d}", **outcome.record(),
                 "wall_s": round(time.perf_counter() - began, 3)}
        if outcome.note:
            entry["note"] = outcome.note
        log.append(entry)
        if outcome.tours:
            tour = outcome.tours[0]
            log.append(save(args.out, f"d{d}-k{k}.txt", tour, d))
            for target in range(k + 1, args.max_lift + 1):
                log.append(save(args.out, f"d{d}-k{target}-from-k{k}.txt", lift_to(tour, d, target), d))

    for entry in log:
        print(json.dumps(entry))
    (args.out / "results.jsonl").write_text("".join(json.dumps(e) + "\n" for e in log))


if __name__ == "__main__":
    main()
