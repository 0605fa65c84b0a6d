#!/usr/bin/env python3
"""Desk-scale evidence tables for the degree dichotomy.

Emits three CSV blocks: triple-line densities of y = x^d samples per
degree (cubics stabilize at count/n^2 = 1/2, other degrees collapse),
quadruple-line counts, and direction counts (the parabola's 2n-3
against the cubic's superlinear growth).  Counts are exact; the tables
are evidence at desk scale, not verification of any asymptotic claim.
"""

import argparse
import sys
import time

from orchard import (dichotomy_experiment, few_directions_experiment,
                     graph_power, quadruple_experiment)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="25,50,100,200",
                    help="comma list of half-widths n (sample is [-n, n])")
    ap.add_argument("--degrees", default="3,4")
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    degrees = [int(d) for d in args.degrees.split(",")]

    print("# triple lines of {(i, i^d) : |i| <= n}")
    print("degree,n,count,count_per_n2,ratio_to_N2_over_8")
    for row in dichotomy_experiment(degrees, sizes):
        big_n = 2 * row.n + 1
        rel = row.count / (big_n * big_n / 8)
        print(f"{row.degree},{row.n},{row.count},"
              f"{float(row.ratio_n2):.5f},{rel:.5f}")

    print()
    print("# lines with >= 4 sample points")
    print("degree,n,count")
    for d in degrees:
        for n in sizes:
            c = quadruple_experiment(graph_power(d), range(-n, n + 1))
            print(f"{d},{n},{c}")

    print()
    print("# distinct directions of {(i, i^d) : 1 <= i <= n}")
    print("degree,n,count,count_per_n")
    for d in (2, 3):
        for n in sizes:
            c = few_directions_experiment(graph_power(d), range(1, n + 1))
            print(f"{d},{n},{c},{c / n:.3f}")
    return 0


if __name__ == "__main__":
    t0 = time.time()
    code = main()
    print(f"# done in {time.time() - t0:.1f}s", file=sys.stderr)
    sys.exit(code)
