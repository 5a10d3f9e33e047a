"""Run the classifier/oracle cross-check over a parameter box and save JSON lines.

    python scripts/run_scan.py                      # default box, r <= p
    python scripts/run_scan.py --beyond --out scan.jsonl
"""

import argparse
import json
import time
from pathlib import Path

from ttunlink.scan import ScanConfig, ScanSummary, run_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p-max", type=int, default=8)
    ap.add_argument("--s-range", type=int, default=4, help="scan s in [-S, S] minus 0")
    ap.add_argument("--beyond", action="store_true", help="also scan p < r <= p+q")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    config = ScanConfig(
        p_max=args.p_max,
        s_min=-args.s_range,
        s_max=args.s_range,
        r_beyond_p=args.beyond,
        jobs=args.jobs,
    )
    summary = ScanSummary()
    t0 = time.perf_counter()
    sink = args.out.open("w") if args.out else None
    try:
        for f in run_scan(config):
            summary.add(f)
            if sink:
                sink.write(json.dumps(f.to_json(), separators=(",", ":")) + "\n")
    finally:
        if sink:
            sink.close()
    elapsed = time.perf_counter() - t0

    result = summary.to_json()
    print(f"{summary.tuples} tuples in {elapsed:.1f}s")
    print("accepted:", " ".join(",".join(map(str, t)) for t in summary.unlink_tuples))
    print("discrepancies:", result["discrepancies"])
    return 2 if summary.failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
