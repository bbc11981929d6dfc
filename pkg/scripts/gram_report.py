"""Gram determinants and their roots for every standard module of J_{l,n}.

    python3 scripts/gram_report.py --l 1 --n 4
"""
import argparse
from fractions import Fraction

from brauerheight.exact import format_poly, rank_at, root_multiset
from brauerheight.reptheory import gram_matrix, index_set, standard_module_dimension


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--l", type=int, default=1)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--show-matrix", action="store_true")
    args = ap.parse_args()
    for p, lam in index_set(args.l, args.n):
        g = gram_matrix(args.l, args.n, p, lam)
        det = g.det()
        roots = root_multiset(det)
        dim = standard_module_dimension(args.l, args.n, p, lam)
        print(f"p={p} lambda={lam} dim={dim}")
        print(f"    det = {format_poly(det)}")
        for r in sorted(set(roots)):
            try:
                rank = f": rank {rank_at(g.matrix, Fraction(r))}"
            except ValueError:  # irrational root
                rank = ""
            print(f"    root {r} (mult {roots.count(r)}){rank}")
        if args.show_matrix:
            for row in g.matrix.row_lists():
                print("      ", " ".join(f"{format_poly(x):>6}" for x in row))


if __name__ == "__main__":
    main()
