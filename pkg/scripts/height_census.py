"""Height census of J(N,N) and its comparison with closed walks on the Rollet graph.

    python3 scripts/height_census.py --max-n 5
    python3 scripts/height_census.py --max-n 6     # about a minute
"""
import argparse
import time
from dataclasses import dataclass

from brauerheight.bratteli import count_closed_walks
from brauerheight.height import certify_by_counts, enumerate_by_height


@dataclass
class CensusConfig:
    max_n: int = 5
    use_cache: bool = True


def run(cfg: CensusConfig):
    for n in range(1, cfg.max_n + 1):
        t = time.perf_counter()
        census = enumerate_by_height(n, n, use_cache=cfg.use_cache).census()
        cumulative, rows = 0, []
        for l in sorted(census):
            cumulative += census[l]
            rows.append(f"l={l}: {census[l]} (<= l: {cumulative}, walks {count_closed_walks(l, n)})")
        ok = certify_by_counts(n)
        print(f"N={n}  certified={ok}  {time.perf_counter() - t:.1f}s")
        for row in rows:
            print("   ", row)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--no-cache", action="store_true")
    args = ap.parse_args()
    run(CensusConfig(args.max_n, not args.no_cache))


if __name__ == "__main__":
    main()
