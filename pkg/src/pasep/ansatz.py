"""Matrix-product ansatz computations.

The stationary weights of the open exclusion process are generated by
operators D and E with D E - q E D = D + E and boundary vectors that the
scaled tridiagonal matrices below realize explicitly:

    (1-q) D:  diagonal 1 + bt q^i, superdiagonal 1 - at bt q^i
    (1-q) E:  diagonal 1 + at q^i, subdiagonal   1 - q^(i+1)

with at = (1-q)a - 1, bt = (1-q)b - 1, and <W| = |V> = first coordinate.
Truncation to dimension N+1 is lossless for length-N words because the
matrices are tridiagonal and the walk starts and ends at index 0.

Independently of any representation, the normal ordering of (yD + E)^N in
the free algebra gives coefficients c[N][i, j] with
(yD+E)^N = sum c[N][i,j] E^i D^j, and the partition function is obtained by
replacing E^i D^j with a^i b^j.  A second, rook-placement flavored route
normal orders (qy Dh + q Eh)^k for the shifted operators
Dh = ((q-1) D + I)/q, Eh = ((q-1) E + I)/q whose coefficients d[k][i, j]
satisfy a three-term recurrence solved by q-binomial times the
ballot-difference kernel M.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .polyring import (
    ALPHA_TILDE,
    BETA_TILDE,
    MPoly,
    ONE,
    Q,
    Y,
    ZERO,
    exact_div_pow_one_minus_q,
    monomial,
)
from .qtools import binomial, q_binomial, touchard_M


@dataclass(frozen=True)
class TruncatedOperator:
    dim: int
    entries: tuple[tuple[MPoly, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> MPoly:
        return self.entries[ij[0]][ij[1]]


def build_scaled_DE(dim: int) -> tuple[TruncatedOperator, TruncatedOperator]:
    """Truncated matrices for (1-q)D and (1-q)E, boundary parameters expanded."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    d_rows = []
    e_rows = []
    for i in range(dim):
        d_row = [ZERO] * dim
        e_row = [ZERO] * dim
        d_row[i] = ONE + BETA_TILDE * Q**i
        e_row[i] = ONE + ALPHA_TILDE * Q**i
        if i + 1 < dim:
            d_row[i + 1] = ONE - ALPHA_TILDE * BETA_TILDE * Q**i
        if i >= 1:
            e_row[i - 1] = ONE - Q**i
        d_rows.append(tuple(d_row))
        e_rows.append(tuple(e_row))
    return (
        TruncatedOperator(dim, tuple(d_rows)),
        TruncatedOperator(dim, tuple(e_rows)),
    )


def mat_mul(m1: TruncatedOperator, m2: TruncatedOperator) -> TruncatedOperator:
    dim = m1.dim
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            acc = ZERO
            for k in range(dim):
                if m1.entries[i][k] and m2.entries[k][j]:
                    acc = acc + m1.entries[i][k] * m2.entries[k][j]
            row.append(acc)
        rows.append(tuple(row))
    return TruncatedOperator(dim, tuple(rows))


def mat_combine(c1, m1: TruncatedOperator, c2, m2: TruncatedOperator) -> TruncatedOperator:
    dim = m1.dim
    rows = tuple(
        tuple(c1 * m1.entries[i][j] + c2 * m2.entries[i][j] for j in range(dim))
        for i in range(dim)
    )
    return TruncatedOperator(dim, rows)


def _first_row_power(m: TruncatedOperator, N: int) -> MPoly:
    # <W| M^N |V> by iterated row-vector products; cheaper than matrix powers
    vec = [ONE] + [ZERO] * (m.dim - 1)
    for _ in range(N):
        nxt = []
        for j in range(m.dim):
            acc = ZERO
            for i in range(max(0, j - 1), min(m.dim, j + 2)):
                if vec[i] and m.entries[i][j]:
                    acc = acc + vec[i] * m.entries[i][j]
            nxt.append(acc)
        vec = nxt
    return vec[0]


@lru_cache(maxsize=None)
def zn_matrix(N: int) -> MPoly:
    """Partition function as <W| (yD + E)^N |V> on the explicit matrices."""
    ds, es = build_scaled_DE(N + 1)
    m = mat_combine(Y, ds, ONE, es)
    return exact_div_pow_one_minus_q(_first_row_power(m, N), N)


def state_weight(word: str, dim: int | None = None) -> MPoly:
    """Unnormalized stationary weight of an occupation word over {D, E}.

    D marks an occupied site, E an empty one; the weight is
    <W| t_1 ... t_N |V> computed on the scaled matrices and divided by
    (1-q)^N exactly.
    """
    word = word.upper()
    if any(ch not in "DE" for ch in word):
        raise ValueError("word must be over the alphabet {D, E}")
    N = len(word)
    if dim is None:
        dim = N + 1
    ds, es = build_scaled_DE(dim)
    vec = [ONE] + [ZERO] * (dim - 1)
    for ch in word:
        m = ds if ch == "D" else es
        nxt = []
        for j in range(dim):
            acc = ZERO
            for i in range(max(0, j - 1), min(dim, j + 2)):
                if vec[i] and m.entries[i][j]:
                    acc = acc + vec[i] * m.entries[i][j]
            nxt.append(acc)
        vec = nxt
    return exact_div_pow_one_minus_q(vec[0], N)


# ---------------------------------------------------------------------------
# Normal ordering in the free algebra
# ---------------------------------------------------------------------------

_nf_cache: dict[str, dict[tuple[int, int], MPoly]] = {}


def _normal_form(word: str) -> dict[tuple[int, int], MPoly]:
    """Normal form of a word over {D, E} under D E -> q E D + D + E.

    Returns a map (i, j) -> coefficient polynomial in q such that the word
    equals sum over (i, j) of coeff * E^i D^j.  Rewriting the leftmost D E
    strictly decreases the inversion count, so this terminates; results are
    memoized on the word.
    """
    cached = _nf_cache.get(word)
    if cached is not None:
        return cached
    pos = word.find("DE")
    if pos < 0:
        res = {(word.count("E"), word.count("D")): ONE}
    else:
        u, v = word[:pos], word[pos + 2 :]
        res = {}
        for key, c in _normal_form(u + "ED" + v).items():
            res[key] = res.get(key, ZERO) + Q * c
        for sub in (u + "D" + v, u + "E" + v):
            for key, c in _normal_form(sub).items():
                res[key] = res.get(key, ZERO) + c
        res = {key: c for key, c in res.items() if c}
    _nf_cache[word] = res
    return res


@lru_cache(maxsize=None)
def normal_order(N: int) -> dict[tuple[int, int], MPoly]:
    """Coefficients c[N][i, j] of (yD + E)^N = sum c E^i D^j.

    Computed over the free algebra by expanding into the 2^N words and
    rewriting each word; the coefficients are polynomials in y and q with
    non-negative integer coefficients.
    """
    out: dict[tuple[int, int], MPoly] = {}
    for letters in product("ED", repeat=N):
        word = "".join(letters)
        yk = monomial(1, ey=word.count("D"))
        for key, c in _normal_form(word).items():
            out[key] = out.get(key, ZERO) + yk * c
    return {key: c for key, c in out.items() if c}


@lru_cache(maxsize=None)
def zn_normal(N: int) -> MPoly:
    """Partition function assembled from the normal form: sum c[i,j] a^i b^j."""
    acc = ZERO
    for (i, j), c in normal_order(N).items():
        acc = acc + c * monomial(1, ea=i, eb=j)
    return acc


# ---------------------------------------------------------------------------
# Hatted operators
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def hatted_coeffs(k: int) -> dict[tuple[int, int], MPoly]:
    """d[k][i, j] by the recurrence
    d[k+1][i,j] = d[k][i,j-1] + q^j d[k][i-1,j] + y(1 - q^(j+1)) d[k][i,j+1]
    from d[0] = {(0,0): 1}."""
    if k == 0:
        return {(0, 0): ONE}
    prev = hatted_coeffs(k - 1)
    out: dict[tuple[int, int], MPoly] = {}

    def add(key, val):
        out[key] = out.get(key, ZERO) + val

    for (i, j), c in prev.items():
        add((i, j + 1), c)
        add((i + 1, j), monomial(1, eq=j) * c)
        if j >= 1:
            add((i, j - 1), Y * (ONE - monomial(1, eq=j)) * c)
    return {key: c for key, c in out.items() if c}


def hatted_closed_form(k: int, i: int, j: int) -> MPoly:
    """Closed form [i+j, i]_q * M((k-i-j)/2, k); zero when k-i-j is odd."""
    if (k - i - j) % 2:
        return ZERO
    return q_binomial(i + j, i) * touchard_M((k - i - j) // 2, k)


@lru_cache(maxsize=None)
def zn_hatted(N: int) -> MPoly:
    """Partition function through the shifted-operator normal form.

    (1-q)^N Z equals sum over k of C(N,k) (1+y)^(N-k) (-1)^k times the
    (0,0) expectation of (qy Dh + q Eh)^k, and that expectation expands as
    sum d[k][i,j] (-at)^i (-y bt)^j; the parity of d makes all signs cancel.
    """
    acc = ZERO
    one_plus_y_pow = [ONE]
    for _ in range(N):
        one_plus_y_pow.append(one_plus_y_pow[-1] * (ONE + Y))
    for k in range(N + 1):
        inner = ZERO
        for (i, j), c in hatted_coeffs(k).items():
            inner = inner + c * ALPHA_TILDE**i * (Y * BETA_TILDE) ** j
        acc = acc + binomial(N, k) * one_plus_y_pow[N - k] * inner
    return exact_div_pow_one_minus_q(acc, N)
