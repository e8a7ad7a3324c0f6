from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pasep.polyring import (
    A,
    B,
    MPoly,
    NotDivisible,
    DegreeTooHigh,
    ONE,
    Q,
    Y,
    ZERO,
    ALPHA_TILDE,
    BETA_TILDE,
    canonical_string,
    coeff_of,
    eval_rational,
    exact_div_pow_one_minus_q,
    exact_div_var,
    parse_poly,
    substitute,
    y_reflect,
)

exponents = st.tuples(
    st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)
)
polys = st.dictionaries(exponents, st.integers(-9, 9), max_size=6).map(MPoly)


def test_difference_of_squares():
    assert (ONE - Q) * (ONE + Q) == ONE - Q**2


def test_additive_identity():
    p = A + 2 * Y * B
    assert p + ZERO == p


def test_binomial_square():
    assert (A + Y * B) ** 2 == A**2 + 2 * Y * A * B + Y**2 * B**2


def test_alpha_tilde_substitution():
    # carrying the shifted parameter as the variable a and substituting
    expr = A + Y * B
    got = substitute(substitute(expr, "a", ALPHA_TILDE), "b", BETA_TILDE)
    assert got == (ONE - Q) * A - ONE + Y * ((ONE - Q) * B - ONE)


def test_substitute_q_zero():
    p = ONE - Q**4
    assert substitute(p, "q", ZERO) == ONE


def test_substitute_y_one():
    assert substitute(Y * B + A, "y", ONE) == A + B


def test_exact_div_constructed_quotient():
    p = (ONE - Q) ** 2 * (A + Y * B)
    assert exact_div_pow_one_minus_q(p, 2) == A + Y * B


def test_exact_div_failure():
    with pytest.raises(NotDivisible):
        exact_div_pow_one_minus_q(ONE + Q, 1)


def test_exact_div_var():
    assert exact_div_var(Y**2 * A, "y", 2) == A
    with pytest.raises(NotDivisible):
        exact_div_var(Y + ONE, "y", 1)


def test_eval_rational():
    assert eval_rational(Y * B + A, a=1, b=1, y=1, q=0) == 2
    qb42 = parse_poly("q^4 + q^3 + 2*q^2 + q + 1")
    assert eval_rational(qb42, a=1, b=1, y=1, q=1) == 6
    assert eval_rational(A * B, a=Fraction(1, 2), b=Fraction(2, 3), y=0, q=0) == Fraction(1, 3)


def test_canonical_strings():
    assert canonical_string(ZERO) == "0"
    assert canonical_string(ONE) == "1"
    assert canonical_string(Y * B + A) == "y*b + a"
    assert canonical_string(A - 2 * Q) == "-2*q + a"


def test_coeff_of():
    p = Y**2 * A + Y * B + A
    assert coeff_of(p, "y", 1) == B
    assert coeff_of(p, "y", 0) == A


def test_y_reflect_examples():
    assert y_reflect(Y * B + A, 1) == Y * B + A
    assert y_reflect(A**2, 2) == Y**2 * B**2
    with pytest.raises(DegreeTooHigh):
        y_reflect(Y**3, 2)


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, r, s):
    assert (p + r) + s == p + (r + s)
    assert p + r == r + p
    assert (p * r) * s == p * (r * s)
    assert p * r == r * p
    assert p * (r + s) == p * r + p * s


@settings(max_examples=80, deadline=None)
@given(polys, st.integers(0, 4))
def test_exact_div_round_trip(p, n):
    assert exact_div_pow_one_minus_q(p * (ONE - Q) ** n, n) == p


@settings(max_examples=150, deadline=None)
@given(polys)
def test_canonical_parse_round_trip(p):
    assert parse_poly(canonical_string(p)) == p


@settings(max_examples=100, deadline=None)
@given(polys, st.integers(0, 3))
def test_y_reflect_involution(p, extra):
    n = p.deg("y") + extra
    assert y_reflect(y_reflect(p, n), n) == p
