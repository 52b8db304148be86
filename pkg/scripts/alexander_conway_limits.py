#!/usr/bin/env python3
"""Reproduce the headline weight-system identities at desk scale.

Runs, in order: the wheel values of the Conway family, the convolution
identity, the sl2 top-coefficient comparison, the gl(1|1) limit, and the
osp(1|2) wheel formula, printing the exact values as it goes.

Usage: python scripts/alexander_conway_limits.py [max_degree]
"""

import sys

from jacobiws.algebra import osp12, sl2
from jacobiws.conway import check_convolution_identity, conway, conway_bar
from jacobiws.deframe import even_partitions, tau
from jacobiws.hopf import e_set
from jacobiws.statesum import gl11_theorem_violations
from jacobiws.verma import classical_wheel_formula, highest_weight_poly, knn
from jacobiws.diagrams import diagram_from_key


def main():
    max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 3

    print("== Conway family on wheels ==")
    for n in range(max_degree + 1):
        cn = conway(n)
        for P in even_partitions(n):
            values = {str(cn.on_key(k)) for k in e_set(tau(P))}
            print("  c_%d on E(tau_%s) = %s" % (n, list(P), sorted(values)))

    print("== convolution identity ==")
    for n in range(max_degree + 1):
        report = check_convolution_identity(n)
        bad = [v for v in report.values() if v != (1 if n == 0 else 0)]
        print("  degree %d: %d classes, %d violations" % (n, len(report), len(bad)))

    print("== sl2 top weight coefficient vs the inverse family ==")
    for n in range(max_degree + 1):
        same = knn(n, sl2()).value_vector() == conway_bar(n).value_vector()
        print("  degree %d: %s" % (n, "equal" if same else "DIFFERENT"))

    print("== gl(1|1) limit ==")
    for n in range(1, max_degree + 1):
        bad = gl11_theorem_violations(n)
        print("  degree %d: %d mismatches" % (n, len(bad)))

    print("== osp(1|2) wheels ==")
    for n in range(2, max_degree + 1, 2):
        for P in even_partitions(n):
            expected = classical_wheel_formula(osp12(), P).homogeneous_part(n)
            key = e_set(tau(P))[0]
            got = highest_weight_poly(diagram_from_key(key), osp12())
            print(
                "  tau_%s: top part %s (formula %s)"
                % (list(P), got.homogeneous_part(n).text(), expected.text())
            )


if __name__ == "__main__":
    main()
