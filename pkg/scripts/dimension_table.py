#!/usr/bin/env python3
"""Tabulate quotient dimensions and wheel ranks degree by degree.

Usage: python scripts/dimension_table.py [max_degree]

The "legged" column restricts to classes whose components all touch the
Wilson loop (the classical dimensions 1, 1, 2, 3, 6, ...); the full
quotient also carries the legless classes, which no relation touches.
"""

import sys
import time

from jacobiws.deframe import even_partitions, tau_classes
from jacobiws.diagrams import canonical_key, enumerate_ccds, internal_components
from jacobiws.hopf import build_A, generate_stu
from jacobiws.linalg import QuotientSpace, RowReducer


def legged_dim(n):
    legged = [
        canonical_key(d)
        for d in enumerate_ccds(n)
        if all(c.legs for c in internal_components(d))
    ]
    legged_set = set(legged)
    rels = [
        rel.lincomb()
        for rel in generate_stu(n)
        if set(rel.lincomb().keys()) <= legged_set
    ]
    return QuotientSpace.build(legged, rels).dim


def wheel_rank(n):
    space = build_A(n)
    pos = {key: i for i, key in enumerate(space.basis)}
    reducer = RowReducer()
    for w in tau_classes(n):
        reducer.add({pos[k]: c for k, c in space.reduce(w).items()})
    return reducer.rank


def main():
    max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    print("n  classes  dim A_n  legged  even-partitions  wheel-rank  time")
    for n in range(max_degree + 1):
        t0 = time.time()
        classes = len(enumerate_ccds(n))
        dim = build_A(n).dim
        ld = legged_dim(n)
        parts = len(even_partitions(n))
        rank = wheel_rank(n)
        print(
            "%d  %7d  %7d  %6d  %15d  %10d  %5.1fs"
            % (n, classes, dim, ld, parts, rank, time.time() - t0)
        )


if __name__ == "__main__":
    main()
