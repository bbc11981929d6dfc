"""Sweep DP heights against a brute force over all short slice words.

    python3 scripts/sweep_vs_bounded.py --n 3 --m 3 --events 6 --width 5
"""
import argparse
import time

from brauerheight.height import bounded_search, partition_height


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--events", type=int, default=6)
    ap.add_argument("--width", type=int, default=None)
    args = ap.parse_args()
    t = time.perf_counter()
    found = bounded_search(args.n, args.m, args.events, args.width)
    lower, higher = [], 0
    for p, (h, word) in found.items():
        sweep = partition_height(p).value
        if h < sweep:
            lower.append((p, h, sweep, word))
        elif h > sweep:
            higher += 1
    print(f"{len(found)} diagrams realized in <= {args.events} events ({time.perf_counter() - t:.1f}s)")
    print(f"brute force higher than sweep (word too short): {higher}")
    print(f"brute force lower than sweep: {len(lower)}")
    for p, h, s, w in lower:
        print(f"    {p}: brute {h}, sweep {s}, word {w}")


if __name__ == "__main__":
    main()
