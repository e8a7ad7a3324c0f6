"""Closed formulas for the partition function and its specializations.

The headline formula expresses the partition function as

    Z(N) = (1-q)^(-N) * sum_{n=0..N} R(N, n) * B(n)

where R(N, n) is a ballot-type double sum in y and q and B(n) is the
q-binomial expansion sum_k [n,k]_q at^k (y bt)^(n-k) in the shifted
boundary parameters.  Around it live the y=1 collapse of R, the a=b=1
triple sum, the y=q=1 rising product, the Al-Salam-Chihara moment formulas
(both the ballot form and Stanton's rational evaluation), q-secant and
q-tangent numbers, Carlitz q-Stirling numbers, q-Eulerian extraction, Fine
polynomials, and the standalone binomial identities used along the way.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .paths import MomentRecurrence
from .polyring import (
    ALPHA_TILDE,
    BETA_TILDE,
    MPoly,
    ONE,
    Q,
    Y,
    ZERO,
    coeff_of,
    exact_div_pow_one_minus_q,
    exact_div_var,
    monomial,
    substitute,
)
from .qtools import binomial, q_binomial, q_int, q_pochhammer_eval


class SingularPoint(ArithmeticError):
    """A rational evaluation point makes a denominator factor vanish."""


# ---------------------------------------------------------------------------
# The main closed formula
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def R_formula(N: int, n: int) -> MPoly:
    """R(N, n) = sum_i (-y)^i q^C(i+1,2) [n+i, i]_q *
    sum_j y^j (C(N,j) C(N,n+2i+j) - C(N,j-1) C(N,n+2i+j+1))."""
    if not 0 <= n <= N:
        raise ValueError("need 0 <= n <= N")
    acc = ZERO
    for i in range((N - n) // 2 + 1):
        inner: dict[tuple[int, int, int, int], int] = {}
        for j in range(N - n - 2 * i + 1):
            c = binomial(N, j) * binomial(N, n + 2 * i + j) - binomial(N, j - 1) * binomial(
                N, n + 2 * i + j + 1
            )
            if c:
                inner[(j, 0, 0, 0)] = c
        sign = -1 if i % 2 else 1
        acc = acc + monomial(sign, ey=i, eq=i * (i + 1) // 2) * q_binomial(n + i, i) * MPoly(inner)
    return acc


@lru_cache(maxsize=None)
def R_y1(N: int, n: int) -> MPoly:
    """The y=1 collapse: sum_i (-1)^i (C(2N,N-n-2i) - C(2N,N-n-2i-2))
    q^C(i+1,2) [n+i, i]_q."""
    acc = ZERO
    for i in range((N - n) // 2 + 1):
        c = binomial(2 * N, N - n - 2 * i) - binomial(2 * N, N - n - 2 * i - 2)
        if not c:
            continue
        sign = -1 if i % 2 else 1
        acc = acc + monomial(sign * c, eq=i * (i + 1) // 2) * q_binomial(n + i, i)
    return acc


@lru_cache(maxsize=None)
def B_formula(n: int) -> MPoly:
    """B(n) = sum_k [n, k]_q at^k (y bt)^(n-k), expanded in a, b, y, q."""
    acc = ZERO
    for k in range(n + 1):
        acc = acc + q_binomial(n, k) * ALPHA_TILDE**k * (Y * BETA_TILDE) ** (n - k)
    return acc


@lru_cache(maxsize=None)
def zn_closed(N: int) -> MPoly:
    """Partition function by the closed formula; the division is exact."""
    acc = ZERO
    for n in range(N + 1):
        acc = acc + R_formula(N, n) * B_formula(n)
    return exact_div_pow_one_minus_q(acc, N)


@lru_cache(maxsize=None)
def zn_cas1(N: int) -> MPoly:
    """The a = b = 1 specialization from the printed triple sum.

    The triple sum equals (1-q)^(N+1) * y * Z(N) at a = b = 1 (the extra
    factor y is the one carried by the q-Laguerre moment it came from), so
    both exact divisions are performed before returning Z(N)|_{a=b=1}.
    """
    acc = ZERO
    M = N + 1
    for k in range(M + 1):
        inner1: dict[tuple[int, int, int, int], int] = {}
        for j in range(M - k + 1):
            c = binomial(M, j) * binomial(M, j + k) - binomial(M, j - 1) * binomial(M, j + k + 1)
            if c:
                inner1[(j, 0, 0, 0)] = c
        inner2 = ZERO
        for i in range(k + 1):
            inner2 = inner2 + monomial(1, ey=i, eq=i * (k + 1 - i))
        term = MPoly(inner1) * inner2
        acc = acc + (term if k % 2 == 0 else -term)
    return exact_div_var(exact_div_pow_one_minus_q(acc, N + 1), "y", 1)


@lru_cache(maxsize=None)
def zn_product_y1q1(N: int) -> MPoly:
    """The y = q = 1 evaluation: rising product of (a + b + i) over i < N."""
    acc = ONE
    a_plus_b = monomial(1, ea=1) + monomial(1, eb=1)
    for i in range(N):
        acc = acc * (a_plus_b + i)
    return acc


# ---------------------------------------------------------------------------
# Al-Salam-Chihara moments
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def asc_mom_closed(N: int) -> MPoly:
    """2^N times the N-th Al-Salam-Chihara moment, as a polynomial in a, b, q.

    Here a and b are the polynomial variables standing for the two ASC
    parameters.  The n-sum is parity restricted to n = N mod 2:
    sum_n (sum_j (-1)^j q^C(j+1,2) [n+j, j]_q
           (C(N,(N-n)/2 - j) - C(N,(N-n)/2 - j - 1))) * sum_k [n,k]_q a^k b^(n-k).
    """
    acc = ZERO
    for n in range(N % 2, N + 1, 2):
        half = (N - n) // 2
        kernel = ZERO
        for j in range(half + 1):
            c = binomial(N, half - j) - binomial(N, half - j - 1)
            if not c:
                continue
            sign = -1 if j % 2 else 1
            kernel = kernel + monomial(sign * c, eq=j * (j + 1) // 2) * q_binomial(n + j, j)
        bpart = ZERO
        for k in range(n + 1):
            bpart = bpart + q_binomial(n, k) * monomial(1, ea=k, eb=n - k)
        acc = acc + kernel * bpart
    return acc


def asc_halved_recurrence() -> MomentRecurrence:
    """Recurrence of the ASC polynomials in the halved variable x/2.

    Level weight (a+b) q^h, down weight (1-q^h)(1-ab q^(h-1)); its N-th
    moment is 2^N times the ASC moment, matching asc_mom_closed exactly.
    """
    a_plus_b = monomial(1, ea=1) + monomial(1, eb=1)
    ab = monomial(1, ea=1, eb=1)
    return MomentRecurrence(
        b=lambda h: a_plus_b * monomial(1, eq=h),
        lam=lambda h: (ONE - monomial(1, eq=h)) * (ONE - ab * monomial(1, eq=h - 1)),
    )


def shifted_z_recurrence() -> MomentRecurrence:
    """Recurrence whose N-th moment is (1-q)^N Z(N) at y = 1.

    Level weight 2 + (at + bt) q^h, down weight (1-q^h)(1 - at bt q^(h-1)).
    """
    return MomentRecurrence(
        b=lambda h: 2 * ONE + (ALPHA_TILDE + BETA_TILDE) * monomial(1, eq=h),
        lam=lambda h: (ONE - monomial(1, eq=h))
        * (ONE - ALPHA_TILDE * BETA_TILDE * monomial(1, eq=h - 1)),
    )


def qsecant_recurrence() -> MomentRecurrence:
    """Down weight [h]_q^2; even moments are the q-secant numbers."""
    return MomentRecurrence(b=lambda h: ZERO, lam=lambda h: q_int(h) * q_int(h))


def qtangent_recurrence() -> MomentRecurrence:
    """Down weight [h]_q [h+1]_q; even moments are the q-tangent numbers."""
    return MomentRecurrence(b=lambda h: ZERO, lam=lambda h: q_int(h) * q_int(h + 1))


@lru_cache(maxsize=None)
def mu_from_Z(N: int) -> MPoly:
    """2^N times the ASC moment via the binomial transform of Z(k) at y = 1.

    2^N mu(N) = sum_k C(N,k) (-1)^(N-k) 2^(N-k) (1-q)^k Z(k)|_{y=1},
    rewritten in the shifted parameters: a monomial a^i b^j of Z(k) becomes
    (at+1)^i (bt+1)^j (1-q)^(k-i-j), which keeps everything integral.  The
    returned polynomial uses the variables a, b for the ASC parameters and
    equals asc_mom_closed(N).
    """
    a1 = monomial(1, ea=1) + ONE
    b1 = monomial(1, eb=1) + ONE
    acc = ZERO
    for k in range(N + 1):
        zk = substitute(zn_closed(k), "y", ONE)
        rewritten = ZERO
        for (ey, eq, ea, eb), c in zk.items():
            rewritten = rewritten + (
                monomial(c, eq=eq) * a1**ea * b1**eb * (ONE - Q) ** (k - ea - eb)
            )
        sign = -1 if (N - k) % 2 else 1
        acc = acc + sign * binomial(N, k) * (2 ** (N - k)) * rewritten
    return acc


def stanton_moment_eval(N: int, a, b, q) -> Fraction:
    """Exact rational evaluation of the Askey-Wilson-specialized moment sum.

    mu(N) = 2^(-N) sum_k (ab; q)_k q^k sum_j
            q^(-j^2) a^(-2j) (q^j a + q^-j a^-1)^N
            / ((q; q)_j (a^-2 q^(1-2j); q)_j (q; q)_(k-j) (a^2 q^(1+2j); q)_(k-j)).

    Raises SingularPoint when a = 0, q = 0 or any denominator factor
    vanishes; callers resample.
    """
    a, b, q = Fraction(a), Fraction(b), Fraction(q)
    if a == 0 or q == 0:
        raise SingularPoint("a = 0 or q = 0")
    total = Fraction(0)
    for k in range(N + 1):
        abk = q_pochhammer_eval(a * b, q, k)
        inner = Fraction(0)
        for j in range(k + 1):
            denom = (
                q_pochhammer_eval(q, q, j)
                * q_pochhammer_eval(a**-2 * q ** (1 - 2 * j), q, j)
                * q_pochhammer_eval(q, q, k - j)
                * q_pochhammer_eval(a**2 * q ** (1 + 2 * j), q, k - j)
            )
            if denom == 0:
                raise SingularPoint(f"denominator vanishes at k={k}, j={j}")
            num = q ** (-j * j) * a ** (-2 * j) * (q**j * a + q ** (-j) / a) ** N
            inner += num / denom
        total += abk * q**k * inner
    return total / 2**N


# ---------------------------------------------------------------------------
# q-secant and q-tangent numbers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def q_tangent_secant(n: int) -> MPoly:
    """E_n(q) by the ballot-type closed formulas, even and odd cases split.

    E_{2t}(q)   = (1-q)^(-2t) sum_m (C(2t,t-m) - C(2t,t-m-1))
                  sum_{l=0..2m} (-1)^(l+m) q^(l(2m-l)+m)
    E_{2t+1}(q) = (1-q)^(-2t-1) sum_m (C(2t+1,t-m) - C(2t+1,t-m-1))
                  sum_{l=0..2m+1} (-1)^(l+m) q^(l(2m+2-l))

    E_0 = 1 (the even formula at t = 0).
    """
    if n < 0:
        raise ValueError("q_tangent_secant requires n >= 0")
    acc = ZERO
    if n % 2 == 0:
        t = n // 2
        for m in range(t + 1):
            c = binomial(2 * t, t - m) - binomial(2 * t, t - m - 1)
            if not c:
                continue
            inner = ZERO
            for l in range(2 * m + 1):
                sign = -1 if (l + m) % 2 else 1
                inner = inner + monomial(sign, eq=l * (2 * m - l) + m)
            acc = acc + c * inner
        return exact_div_pow_one_minus_q(acc, 2 * t)
    t = (n - 1) // 2
    for m in range(t + 1):
        c = binomial(2 * t + 1, t - m) - binomial(2 * t + 1, t - m - 1)
        if not c:
            continue
        inner = ZERO
        for l in range(2 * m + 2):
            sign = -1 if (l + m) % 2 else 1
            inner = inner + monomial(sign, eq=l * (2 * m + 2 - l))
        acc = acc + c * inner
    return exact_div_pow_one_minus_q(acc, 2 * t + 1)


# ---------------------------------------------------------------------------
# Carlitz q-Stirling numbers of the second kind
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _stirling_rec(n: int, k: int) -> MPoly:
    if k < 1 or k > n:
        return ZERO
    if k == 1 or k == n:
        return ONE
    return _stirling_rec(n - 1, k - 1) + q_int(k) * _stirling_rec(n - 1, k)


def q_stirling2(n: int, k: int, method: str = "recurrence") -> MPoly:
    """S2[n, k] by one of four routes that must agree.

    recurrence:  S2[n,k] = S2[n-1,k-1] + [k]_q S2[n-1,k], boundary 1.
    carl1:       (1-q)^(k-n) sum_j (-q)^j C(n-1, k-1+j) [k-1+j, j]_q.
    carl2:       (1-q)^(k-n) sum_j (-1)^j C(n, k+j) [k+j, j]_q.
    from_Z:      coefficient of b^(k-1) y^(k-1) in Z(n-1) at a = 1.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if method == "recurrence":
        return _stirling_rec(n, k)
    if method == "carl1":
        acc = ZERO
        for j in range(n - k + 1):
            c = binomial(n - 1, k - 1 + j)
            if not c:
                continue
            sign = -1 if j % 2 else 1
            acc = acc + monomial(sign * c, eq=j) * q_binomial(k - 1 + j, j)
        return exact_div_pow_one_minus_q(acc, n - k)
    if method == "carl2":
        acc = ZERO
        for j in range(n - k + 1):
            c = binomial(n, k + j)
            if not c:
                continue
            sign = -1 if j % 2 else 1
            acc = acc + sign * c * q_binomial(k + j, j)
        return exact_div_pow_one_minus_q(acc, n - k)
    if method == "from_Z":
        z = substitute(zn_closed(n - 1), "a", ONE)
        return coeff_of(coeff_of(z, "y", k - 1), "b", k - 1)
    raise ValueError(f"unknown method {method!r}")


def q_stirling1_extract(N: int, k: int, via: str = "minima") -> MPoly:
    """q-analog of the first-kind Stirling numbers as a Z-coefficient.

    Coefficient of b^k in Z(N) at y = a = 1 (via="minima"), or of a^k at
    y = b = 1 (via="maxima"); the particle-hole symmetry makes the two
    extractions agree.
    """
    z = substitute(zn_closed(N), "y", ONE)
    if via == "minima":
        return coeff_of(substitute(z, "a", ONE), "b", k)
    if via == "maxima":
        return coeff_of(substitute(z, "b", ONE), "a", k)
    raise ValueError(f"unknown extraction {via!r}")


# ---------------------------------------------------------------------------
# q-Eulerian extraction and the classical reference triangles
# ---------------------------------------------------------------------------


def q_eulerian(N: int, k: int) -> MPoly:
    """Coefficient of y^k in Z(N) at a = b = 1 (a q-Eulerian polynomial)."""
    if not 0 <= k <= N:
        raise ValueError("need 0 <= k <= N")
    z = substitute(substitute(zn_closed(N), "a", ONE), "b", ONE)
    return coeff_of(z, "y", k)


@lru_cache(maxsize=None)
def eulerian_number(n: int, k: int) -> int:
    """Classical Eulerian triangle: permutations of n with k-1 descents."""
    if n < 1 or k < 1 or k > n:
        return 0
    if n == 1:
        return 1 if k == 1 else 0
    return (n - k + 1) * eulerian_number(n - 1, k - 1) + k * eulerian_number(n - 1, k)


def narayana_number(n: int, k: int) -> int:
    """N(n, k) = C(n, k) C(n, k-1) / n."""
    if n < 1 or k < 1 or k > n:
        return 0
    return binomial(n, k) * binomial(n, k - 1) // n


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# Fine polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def fine_from_Z(N: int) -> MPoly:
    """F_N(y) as the q = 0, b = 1, a = -y specialization of Z(N)."""
    z = substitute(zn_closed(N), "q", ZERO)
    z = substitute(z, "b", ONE)
    return substitute(z, "a", -Y)


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------


def idbinl_check(N: int, n: int, i: int) -> bool:
    """Dyck-prefix versus Motzkin-prefix binomial identity, as polynomials in y.

    sum_{k>=i} y^(k-i) C(N, n+2k) (1+y)^(N-n-2k)
               (C(n+2k, k-i) - C(n+2k, k-i-1))
      == sum_j y^j (C(N,j) C(N,n+2i+j) - C(N,j-1) C(N,n+2i+j+1)).
    """
    lhs = ZERO
    upper = (N - n) // 2 if N >= n else -1
    for k in range(i, upper + 1):
        c = binomial(N, n + 2 * k) * (binomial(n + 2 * k, k - i) - binomial(n + 2 * k, k - i - 1))
        if not c:
            continue
        lhs = lhs + monomial(c, ey=k - i) * (ONE + Y) ** (N - n - 2 * k)
    rhs: dict[tuple[int, int, int, int], int] = {}
    for j in range(max(0, N - n - 2 * i) + 1):
        c = binomial(N, j) * binomial(N, n + 2 * i + j) - binomial(N, j - 1) * binomial(
            N, n + 2 * i + j + 1
        )
        if c:
            rhs[(j, 0, 0, 0)] = c
    return lhs == MPoly(rhs)


def qbinom_lemma_lower(m: int, l: int) -> bool:
    """sum_j (-1)^j q^C(j,2) [2m-j, l]_q [l, j]_q == q^(l(2m-l)), 0 <= l <= 2m."""
    lhs = ZERO
    for j in range(l + 1):
        term = q_binomial(2 * m - j, l) * q_binomial(l, j) * monomial(1, eq=j * (j - 1) // 2)
        lhs = lhs + (term if j % 2 == 0 else -term)
    return lhs == monomial(1, eq=l * (2 * m - l))


def qbinom_lemma_upper(m: int, l: int) -> bool:
    """sum_j (-1)^j q^C(j-1,2) [2m-j, l]_q [l, j]_q equals
    (q^((l+1)(2m-l)) - q^(l(2m-l)) + q^(l(2m-l+1)) - q^((l+1)(2m-l+1)))
    / (q^(2m-1) (1-q)), for 1 <= l <= 2m.

    The exponent C(j-1, 2) follows the polynomial convention
    (j-1)(j-2)/2, which is 1 at j = 0.
    """
    lhs = ZERO
    for j in range(l + 1):
        term = (
            q_binomial(2 * m - j, l)
            * q_binomial(l, j)
            * monomial(1, eq=(j - 1) * (j - 2) // 2)
        )
        lhs = lhs + (term if j % 2 == 0 else -term)
    numerator = (
        monomial(1, eq=(l + 1) * (2 * m - l))
        - monomial(1, eq=l * (2 * m - l))
        + monomial(1, eq=l * (2 * m - l + 1))
        - monomial(1, eq=(l + 1) * (2 * m - l + 1))
    )
    rhs = exact_div_var(exact_div_pow_one_minus_q(numerator, 1), "q", 2 * m - 1)
    return lhs == rhs
