"""Print N_d, N_2,d, W11, W13, T_d and the KQR comparison value up to a degree.

    python scripts/extended_table.py 20
"""
import sys
import time

from curvecount import CountCache, breakdown, n_rational


def main(d_max=12):
    cache = CountCache()
    start = time.perf_counter()
    print("d\tN_d\tN_2_d\tW11\tW13\tT_d\tkqr")
    for d in range(1, d_max + 1):
        b = breakdown(d, cache)
        print(f"{d}\t{n_rational(d, cache)}\t{b.n2d}\t{b.w11}\t{b.w13}\t{b.tacnodal}\t{b.kqr_published}")
    print(f"# {time.perf_counter() - start:.3f}s", file=sys.stderr)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 12)
