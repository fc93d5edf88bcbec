"""Compile complete graphs in every mode and compare measured lines/gates to the
printed formulas, then time the register farm on each.

    python scripts/complete_graph_sweep.py --n-max 8
"""

import argparse
import time

from hamcircuit import Graph, Mode, compile_graph, find_cycles, report, run_ranks


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-min", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    print("n,mode,bits_formula,bits_measured,ops_formula,ops_measured,ops_ratio,flagged,cycles,seconds")
    for n in range(args.n_min, args.n_max + 1):
        g = Graph.complete(n)
        cycles = len(find_cycles(g))
        for mode in Mode:
            c = compile_graph(g, mode)
            r = report(g, mode, circuit=c)
            t0 = time.perf_counter()
            flagged = len(run_ranks(c, workers=args.workers).entries)
            dt = time.perf_counter() - t0
            ops = r.ops_formula(mode)
            print(
                f"{n},{mode},{r.bits_formula(mode)},{r.bits_measured},{ops},{r.ops_measured},"
                f"{r.ops_measured / ops:.3f},{flagged},{cycles},{dt:.3f}"
            )


if __name__ == "__main__":
    main()
