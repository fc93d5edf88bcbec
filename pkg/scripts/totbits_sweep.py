"""Total bits a register farm must reserve, NUM x BITS ~ k*n!, over a range of n.

    python scripts/totbits_sweep.py --n-max 14 [--plot totbits.png]
"""

import argparse
import sys

from hamcircuit.resources import totbits_table


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-min", type=int, default=2)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--plot", help="write a log-scale plot to this path (needs matplotlib)")
    args = parser.parse_args()

    table = totbits_table(range(args.n_min, args.n_max + 1))
    sys.stdout.write(table)
    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        rows = [r.split(",") for r in table.splitlines()[1:]]
        ns = [int(r[0]) for r in rows]
        plt.semilogy(ns, [int(r[4]) for r in rows], "o-", label="k*n!")
        plt.semilogy(ns, [int(r[2]) * int(r[3]) for r in rows], "s--", label="(n-1)! * (n(k+2)-1)")
        plt.xlabel("vertices n")
        plt.ylabel("bits")
        plt.legend()
        plt.grid(True, which="both", alpha=0.3)
        plt.savefig(args.plot, dpi=120, bbox_inches="tight")


if __name__ == "__main__":
    main()
