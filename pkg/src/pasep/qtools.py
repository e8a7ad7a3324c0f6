"""q-calculus and binomial building blocks.

Small, heavily reused primitives: q-integers, Gaussian binomials, rational
q-Pochhammer evaluation, ordinary binomials with the out-of-range-zero
convention, weighted lattice-prefix counting polynomials and the ballot-type
kernel M(l, k) behind the hatted normal ordering.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .polyring import MPoly, ONE, Q, Y, ZERO, monomial


def binomial(n: int, k: int) -> int:
    """C(n, k), defined as 0 whenever k < 0 or k > n.

    The zero convention is load-bearing: every ballot-type difference in
    this package silently relies on terms like C(N, j-1) vanishing at j=0.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def q_int(k: int) -> MPoly:
    """[k]_q = 1 + q + ... + q^(k-1); [0]_q = 0."""
    return MPoly({(0, i, 0, 0): 1 for i in range(k)})


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> MPoly:
    """Gaussian binomial [n, k]_q via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + Q**k * q_binomial(n - 1, k)


def q_pochhammer_eval(x: Fraction, q: Fraction, k: int) -> Fraction:
    """(x; q)_k = prod_{i<k} (1 - x q^i) at a rational point; empty product 1."""
    x, q = Fraction(x), Fraction(q)
    out = Fraction(1)
    power = Fraction(1)
    for _ in range(k):
        out *= 1 - x * power
        power *= q
    return out


def motzkin_prefix_gf(N: int, h: int) -> MPoly:
    """Weighted count of Motzkin prefixes of length N and final height h.

    Weight 1+y on every level step and y on every down step:
    sum_j y^j (C(N,j) C(N,h+j) - C(N,j-1) C(N,h+j+1)).
    """
    out: dict[tuple[int, int, int, int], int] = {}
    for j in range(N - h + 1):
        c = binomial(N, j) * binomial(N, h + j) - binomial(N, j - 1) * binomial(N, h + j + 1)
        if c:
            out[(j, 0, 0, 0)] = c
    return MPoly(out)


def dyck_prefix_weighted(length: int, h: int) -> MPoly:
    """Dyck prefixes of given length and final height h, weight y per down step.

    Zero unless length >= h >= 0 with length and h of equal parity; otherwise
    y^((length-h)/2) (C(length,(length-h)/2) - C(length,(length-h)/2 - 1)).
    """
    if h < 0 or h > length or (length - h) % 2:
        return ZERO
    k = (length - h) // 2
    return monomial(binomial(length, k) - binomial(length, k - 1), ey=k)


def touchard_M(l: int, k: int) -> MPoly:
    """Ballot-difference kernel M(l, k).

    y^l sum_u (-1)^u q^(u(u+1)/2) [k-2l+u, u]_q (C(k, l-u) - C(k, l-u-1)),
    with M(l, k) = 0 for l < 0 by convention.
    """
    if l < 0:
        return ZERO
    if 2 * l > k:
        raise ValueError("touchard_M requires 0 <= 2l <= k")
    acc = ZERO
    for u in range(l + 1):
        c = binomial(k, l - u) - binomial(k, l - u - 1)
        if not c:
            continue
        term = q_binomial(k - 2 * l + u, u) * monomial(c, eq=u * (u + 1) // 2)
        acc = acc + (term if u % 2 == 0 else -term)
    return Y**l * acc
