#!/usr/bin/env python3
"""Dimension and curvature ledger along refinement sequences.

For each start graph, prints per step: vertex count, f-vector, exact
dimension, Euler characteristic, and the curvature range (min, max).

Usage: python scripts/refinement_dims.py [--steps N]
"""

import argparse

from whitneyprod.graphs import named
from whitneyprod.product import refine_sequence
from whitneyprod.topology import curvature

STARTS = [
    ("complete", [3]),
    ("complete", [4]),
    ("house", []),
    ("lollipop", []),
]


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--steps", type=int, default=3)
    args = parser.parse_args()

    for name, params in STARTS:
        g = named(name, params)
        rep = refine_sequence(g, args.steps)
        print(f"\n{name}{params}  (truncated={rep.truncated})")
        print(f"{'step':>4} {'vertices':>9} {'dim':>12} {'chi':>4} "
              f"{'curv min':>10} {'curv max':>10}  f-vector")
        for i, step in enumerate(rep.steps):
            cur = curvature(step.graph)
            lo, hi = min(cur.per_vertex), max(cur.per_vertex)
            print(f"{i:>4} {step.graph.n:>9} {str(step.dim):>12} "
                  f"{step.euler:>4} {str(lo):>10} {str(hi):>10}  {step.f_vector}")


if __name__ == "__main__":
    main()
