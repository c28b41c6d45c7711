#!/usr/bin/env python3
"""
hbw Usage Example

Walks through the partition route on a small star quiver: partition,
matrices V and W, dim H^1 with basis labels, and the oracle cross-check.
"""

import os
import sys

# Add src to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hbw import (  # noqa: E402
    RATIONALS,
    PrimeField,
    algorithm_a,
    algorithm_b,
    check_equivalence,
    h1,
    regular_rep,
)
from hbw.cli import gen_example  # noqa: E402
from hbw.cli.documents import render_matrix_pair  # noqa: E402


def main():
    print("=" * 60)
    print("First Baues-Wirsching Cohomology - Implementation Demo")
    print("=" * 60)
    print()

    quiver = gen_example("star", 3)
    print("Quiver (star 3)...")
    for arrow in quiver.arrows:
        print(f"  {arrow.name}: {arrow.source} -> {arrow.target}")
    print()

    print("Algorithm A...")
    partition = algorithm_a(quiver)
    print(f"  {partition.render()}")
    print()

    print("Algorithm B...")
    pair = algorithm_b(quiver, partition)
    for line in render_matrix_pair(pair).splitlines():
        print(f"  {line}")
    print()

    print("Regular module over Q...")
    rep = regular_rep(quiver, RATIONALS)
    result = h1(quiver, rep)
    print(f"  dims:      {dict(rep.dims)}")
    print(f"  ambient:   {result.ambient.total_dim}")
    print(f"  ider rank: {result.ider_rank}")
    print(f"  dim H^1:   {result.dim}")
    for label in result.display_labels:
        print(f"    {label}")
    print()

    print("Oracle cross-check over Q and F_101...")
    for field in (RATIONALS, PrimeField(101)):
        report = check_equivalence(quiver, regular_rep(quiver, field))
        print(f"  {field}: {report}")
    print()

    print("=" * 60)
    print("Demo complete!")
    print("=" * 60)


if __name__ == "__main__":
    main()
