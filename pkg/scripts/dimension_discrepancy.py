#!/usr/bin/env python3
"""Statistics of the refinement dimension jump dim(G1) - dim(G).

Samples seeded Erdos-Renyi graphs, tabulates the discrepancy against the
dimension of G, and reports how often it vanishes (it must on geometric
graphs, and never goes negative).

Usage: python scripts/dimension_discrepancy.py [--n 10] [--percent 50]
       [--samples 300] [--seed 0]
"""

import argparse
from fractions import Fraction

from whitneyprod.graphs import erdos_renyi
from whitneyprod.product import enhance
from whitneyprod.topology import inductive_dimension


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=10)
    parser.add_argument("--percent", type=int, default=50)
    parser.add_argument("--samples", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    total = Fraction(0)
    zero = 0
    negative = 0
    largest = (Fraction(-1), None)
    for i in range(args.samples):
        g = erdos_renyi(args.n, args.percent, args.seed + i)
        d0 = inductive_dimension(g).total
        d1 = inductive_dimension(enhance(g).graph).total
        delta = d1 - d0
        total += delta
        if delta == 0:
            zero += 1
        if delta < 0:
            negative += 1
        if delta > largest[0]:
            largest = (delta, args.seed + i)

    print(f"samples           : {args.samples} from E({args.n}, {args.percent}%)")
    print(f"mean discrepancy  : {total / args.samples} "
          f"(~{float(total / args.samples):.4f})")
    print(f"zero discrepancy  : {zero}")
    print(f"negative (bug!)   : {negative}")
    print(f"largest           : {largest[0]} at seed {largest[1]}")


if __name__ == "__main__":
    main()
