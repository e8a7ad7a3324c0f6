"""Exact sparse polynomial arithmetic in the variables y, q, a, b.

Everything in this package is computed in the ring Z[y, q, a, b] with
arbitrary-precision integer coefficients.  The variables a and b stand for
the reciprocal boundary rates 1/alpha and 1/beta of the open exclusion
process, which makes every partition function value a true polynomial.
The shifted boundary combinations

    alpha_tilde = (1 - q) * a - 1        beta_tilde = (1 - q) * b - 1

are provided as precomputed polynomials (ALPHA_TILDE, BETA_TILDE); they are
never first-class variables.  Division by powers of (1 - q) is the single
place where denominators get discharged, and it insists on a zero remainder
so that a transcription error in any formula fails loudly instead of
producing a wrong polynomial.

Representation: a polynomial maps exponent tuples (ey, eq, ea, eb) to
nonzero coefficients; the zero polynomial is the empty mapping.  Values are
immutable after construction and every operation is a pure function, so
everything here is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping

VARS = ("y", "q", "a", "b")
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}

Exponent = tuple[int, int, int, int]


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder; signals a caller bug."""


class DegreeTooHigh(ValueError):
    """y-degree exceeds the requested reflection degree."""


class MPoly:
    """Sparse exact polynomial in y, q, a, b over the integers."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        t: dict[Exponent, int] = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    t[exp] = t.get(exp, 0) + c
                    if not t[exp]:
                        del t[exp]
        self._t = t

    @classmethod
    def _raw(cls, t: dict[Exponent, int]) -> "MPoly":
        p = cls.__new__(cls)
        p._t = t
        return p

    # -- inspection ---------------------------------------------------

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._t.items())

    @property
    def is_zero(self) -> bool:
        return not self._t

    def num_terms(self) -> int:
        return len(self._t)

    def deg(self, var: str) -> int:
        """Degree in one variable; 0 for the zero polynomial."""
        idx = _VAR_INDEX[var]
        return max((e[idx] for e in self._t), default=0)

    def constant_value(self) -> int:
        """The integer value of a constant polynomial."""
        if not self._t:
            return 0
        if set(self._t) != {(0, 0, 0, 0)}:
            raise ValueError("polynomial is not constant")
        return self._t[(0, 0, 0, 0)]

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "MPoly":
        other = as_poly(other)
        t = dict(self._t)
        for e, c in other._t.items():
            nc = t.get(e, 0) + c
            if nc:
                t[e] = nc
            elif e in t:
                del t[e]
        return MPoly._raw(t)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-as_poly(other))

    def __rsub__(self, other) -> "MPoly":
        return as_poly(other) + (-self)

    def __mul__(self, other) -> "MPoly":
        other = as_poly(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                elif e in out:
                    del out[e]
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = as_poly(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._t == other._t

    __hash__ = None  # mutable-free but identity on purpose: compare by ==

    def __bool__(self) -> bool:
        return bool(self._t)

    def __repr__(self) -> str:
        return f"MPoly({canonical_string(self)!r})"


def as_poly(x) -> MPoly:
    if isinstance(x, MPoly):
        return x
    if isinstance(x, int):
        return MPoly._raw({(0, 0, 0, 0): x}) if x else MPoly._raw({})
    raise TypeError(f"cannot coerce {type(x).__name__} to MPoly")


def monomial(coeff: int, ey: int = 0, eq: int = 0, ea: int = 0, eb: int = 0) -> MPoly:
    if not coeff:
        return ZERO
    return MPoly._raw({(ey, eq, ea, eb): coeff})


ZERO = MPoly()
ONE = monomial(1)
Y = monomial(1, ey=1)
Q = monomial(1, eq=1)
A = monomial(1, ea=1)
B = monomial(1, eb=1)

# Shifted boundary parameters; see module docstring.
ALPHA_TILDE = (ONE - Q) * A - ONE
BETA_TILDE = (ONE - Q) * B - ONE


def substitute(p: MPoly, var: str, value) -> MPoly:
    """Replace every occurrence of `var` in p by `value`, expanded."""
    idx = _VAR_INDEX[var]
    value = as_poly(value)
    groups: dict[int, dict[Exponent, int]] = {}
    for e, c in p._t.items():
        rest = list(e)
        k = rest[idx]
        rest[idx] = 0
        groups.setdefault(k, {})[tuple(rest)] = c
    out = ZERO
    power = ONE
    prev = 0
    for k in sorted(groups):
        for _ in range(k - prev):
            power = power * value
        prev = k
        out = out + MPoly._raw(groups[k]) * power
    return out


def coeff_of(p: MPoly, var: str, k: int) -> MPoly:
    """The coefficient of var**k in p, as a polynomial in the other variables."""
    idx = _VAR_INDEX[var]
    out: dict[Exponent, int] = {}
    for e, c in p._t.items():
        if e[idx] == k:
            rest = list(e)
            rest[idx] = 0
            out[tuple(rest)] = c
    return MPoly._raw(out)


def _div_one_minus_q(p: MPoly) -> MPoly:
    # Synthetic division in q: if p = (1-q) r then the q-coefficients of r
    # are the prefix sums of those of p, and the total sum is the remainder.
    groups: dict[tuple[int, int, int], dict[int, int]] = {}
    for (ey, eq, ea, eb), c in p._t.items():
        groups.setdefault((ey, ea, eb), {})[eq] = c
    out: dict[Exponent, int] = {}
    for (ey, ea, eb), qcoeffs in groups.items():
        deg = max(qcoeffs)
        run = 0
        for k in range(deg + 1):
            run += qcoeffs.get(k, 0)
            if k < deg and run:
                out[(ey, k, ea, eb)] = run
        if run != 0:
            raise NotDivisible("nonzero remainder after division by (1-q)")
    return MPoly._raw(out)


def exact_div_pow_one_minus_q(p: MPoly, n: int) -> MPoly:
    """Return r with r * (1-q)**n == p, raising NotDivisible otherwise."""
    if n < 0:
        raise ValueError("negative divisor power")
    for _ in range(n):
        p = _div_one_minus_q(p)
    return p


def exact_div_var(p: MPoly, var: str, n: int = 1) -> MPoly:
    """Exact division by var**n (every term must carry exponent >= n)."""
    idx = _VAR_INDEX[var]
    out: dict[Exponent, int] = {}
    for e, c in p._t.items():
        if e[idx] < n:
            raise NotDivisible(f"term with {var}-exponent {e[idx]} < {n}")
        rest = list(e)
        rest[idx] -= n
        out[tuple(rest)] = c
    return MPoly._raw(out)


def eval_rational(p: MPoly, a, b, y, q) -> Fraction:
    """Exact evaluation at a rational point."""
    a, b, y, q = Fraction(a), Fraction(b), Fraction(y), Fraction(q)
    total = Fraction(0)
    for (ey, eq, ea, eb), c in p._t.items():
        total += c * y**ey * q**eq * a**ea * b**eb
    return total


def _term_body(c: int, exp: Exponent) -> str:
    factors = []
    if c != 1 or all(e == 0 for e in exp):
        factors.append(str(c))
    for name, e in zip(VARS, exp):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def canonical_string(p: MPoly) -> str:
    """Deterministic rendering, descending lexicographic in (ey, eq, ea, eb).

    Unit coefficients and unit exponents are elided, zero-exponent factors
    omitted; this string is the interchange format of the CLI and the golden
    tests, and parse_poly inverts it exactly.
    """
    if not p._t:
        return "0"
    parts = []
    for exp in sorted(p._t, reverse=True):
        c = p._t[exp]
        body = _term_body(abs(c), exp)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def parse_poly(s: str) -> MPoly:
    """Inverse of canonical_string (also accepts non-canonical term order)."""
    s = s.strip()
    if s == "0":
        return ZERO
    sign = 1
    if s.startswith("-"):
        sign = -1
        s = s[1:]
    chunks = re.split(r" ([+-]) ", s)
    signed = [(sign, chunks[0])]
    for op, term in zip(chunks[1::2], chunks[2::2]):
        signed.append((1 if op == "+" else -1, term))
    terms: dict[Exponent, int] = {}
    for sg, body in signed:
        c = 1
        e = [0, 0, 0, 0]
        for factor in body.split("*"):
            if factor.isdigit():
                c = int(factor)
            else:
                name, _, pw = factor.partition("^")
                if name not in _VAR_INDEX:
                    raise ValueError(f"bad factor {factor!r}")
                e[_VAR_INDEX[name]] = int(pw) if pw else 1
        exp = tuple(e)
        terms[exp] = terms.get(exp, 0) + sg * c
    return MPoly(terms)


def y_reflect(p: MPoly, n: int) -> MPoly:
    """y**n * p(b, a, 1/y, q): swap a and b, send each y**k to y**(n-k).

    This realizes the particle-hole symmetry of the partition function; it
    is an involution whenever deg_y(p) <= n.
    """
    out: dict[Exponent, int] = {}
    for (ey, eq, ea, eb), c in p._t.items():
        if ey > n:
            raise DegreeTooHigh(f"y-degree {ey} exceeds {n}")
        out[(n - ey, eq, eb, ea)] = c
    return MPoly._raw(out)
