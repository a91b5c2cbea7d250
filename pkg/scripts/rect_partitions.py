"""Counts of partitions and rectangular partitions, with glue-map fiber sizes."""

import argparse

from epoly.partitions import enum_partitions, enum_rect_partitions, fibers_of_glue
from epoly.verify import rect_count_series


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--fibers", action="store_true", help="also print fiber sizes per partition")
    args = ap.parse_args()

    product = rect_count_series(args.max_n)
    print(f"{'n':>3} {'p(n)':>6} {'|RP_n|':>7} {'product':>8}")
    for n in range(1, args.max_n + 1):
        print(f"{n:>3} {len(enum_partitions(n)):>6} {len(enum_rect_partitions(n)):>7} {product[n]:>8}")
        if args.fibers:
            for m, f in fibers_of_glue(n).items():
                print(f"      {m}: {len(f)}")


if __name__ == "__main__":
    main()
