"""Check the T(2n+2, 2n, 2n+1, -1) braid identity by handle reduction for n = 1..N."""

import sys
import time

from ttunlink.word_problem import twist_identity_pair, twist_identity_report


def main(n_max=5):
    for n in range(1, n_max + 1):
        t0 = time.perf_counter()
        report = twist_identity_report(n)
        dt = time.perf_counter() - t0
        lhs, _ = twist_identity_pair(n, 0)
        status = "all k pass" if all(report.values()) else f"failed k={[k for k, v in report.items() if not v]}"
        print(f"n={n}: {len(report)} values of k, {lhs.strands} strands, "
              f"{len(lhs.letters)}-letter left side, {status}, {dt:.2f}s")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
