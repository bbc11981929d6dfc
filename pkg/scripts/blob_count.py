"""Left-simple diagrams of height <= 0 against the blob dimensions C(2(n-1), n-1).

    python3 scripts/blob_count.py --max-n 5 --budget 6
"""
import argparse
from math import comb

from brauerheight.height import count_left_simple


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--budget", type=int, default=None,
                    help="also cross-check pictures from the bounded word search")
    args = ap.parse_args()
    for n in range(2, args.max_n + 1):
        rep = count_left_simple(n, 0, budget=args.budget)
        want = comb(2 * (n - 1), n - 1)
        print(f"n={n}: {rep.count} left-simple of {rep.examined}, blob dim {want}, "
              f"disagreements {len(rep.disagreements)}")


if __name__ == "__main__":
    main()
