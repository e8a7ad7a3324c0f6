#!/usr/bin/env python3
"""Print the first partition function polynomials and their specializations.

Run from the repository root after an editable install:

    python3 scripts/partition_tables.py [max_n]
"""

import sys

from pasep.formulas import (
    fine_from_Z,
    q_eulerian,
    q_stirling2,
    q_tangent_secant,
    zn_closed,
    zn_product_y1q1,
)
from pasep.polyring import ONE, canonical_string, substitute


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 5

    print("partition function Z(N) in a = 1/alpha, b = 1/beta, y, q")
    for n in range(max_n + 1):
        print(f"  Z({n}) = {canonical_string(zn_closed(n))}")

    print("\nfactorization at y = q = 1")
    for n in range(max_n + 1):
        print(f"  Z({n}) = {canonical_string(zn_product_y1q1(n))}")

    print("\nq-Eulerian triangle (coefficients of y^k at a = b = 1)")
    for n in range(max_n + 1):
        row = [canonical_string(q_eulerian(n, k)) for k in range(n + 1)]
        print(f"  N={n}: " + " | ".join(row))

    print("\nCarlitz q-Stirling numbers S2[n, k]")
    for n in range(1, max_n + 2):
        row = [canonical_string(q_stirling2(n, k)) for k in range(1, n + 1)]
        print(f"  n={n}: " + " | ".join(row))

    print("\nFine polynomials and q-secant/q-tangent numbers")
    for n in range(1, max_n + 2):
        print(f"  F_{n}(y) = {canonical_string(fine_from_Z(n))}")
    for n in range(1, max_n + 2):
        e = q_tangent_secant(n)
        at1 = substitute(e, "q", ONE).constant_value()
        print(f"  E_{n}(q) = {canonical_string(e)}   E_{n}(1) = {at1}")


if __name__ == "__main__":
    main()
